#include <ppk/rng.hh>
#include <ppk/errors.hh>

#include <cerrno>
#include <cstdlib>

namespace ppk
{
    auto parse_seed(const std::string & text) -> std::uint64_t
    {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("seed must be a non-negative decimal integer, got '" + text + "'");
        errno = 0;
        char * end = nullptr;
        auto value = std::strtoull(text.c_str(), &end, 10);
        if (errno == ERANGE)
            throw ParseError("seed out of 64-bit range: '" + text + "'");
        return value;
    }

    auto seed_from_environment() -> std::optional<std::uint64_t>
    {
        const char * value = std::getenv("PPK_SEED");
        if (! value || ! *value)
            return std::nullopt;
        return parse_seed(value);
    }
}
