#ifndef PPK_BITSET_HH
#define PPK_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace ppk
{
    /**
     * Dynamically sized bitset, stored as 64-bit words. All binary operations
     * require operands of the same size.
     */
    class BitSet
    {
        private:
            int _size = 0;
            std::vector<std::uint64_t> _words;

            auto trim() -> void
            {
                if (_size % 64 != 0 && ! _words.empty())
                    _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
            }

        public:
            BitSet() = default;

            explicit BitSet(int size, bool value = false) :
                _size(size),
                _words((size + 63) / 64, value ? ~std::uint64_t{0} : 0)
            {
                trim();
            }

            static auto from_indices(int size, const std::vector<int> & indices) -> BitSet
            {
                BitSet result(size);
                for (int i : indices)
                    result.set(i);
                return result;
            }

            auto size() const -> int { return _size; }

            auto test(int i) const -> bool
            {
                return (_words[i / 64] >> (i % 64)) & 1;
            }

            auto set(int i) -> void
            {
                _words[i / 64] |= std::uint64_t{1} << (i % 64);
            }

            auto reset(int i) -> void
            {
                _words[i / 64] &= ~(std::uint64_t{1} << (i % 64));
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto flip() -> BitSet &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            auto operator&= (const BitSet & other) -> BitSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const BitSet & other) -> BitSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto subtract(const BitSet & other) -> BitSet &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto intersects(const BitSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto is_subset_of(const BitSet & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            /// popcount(a & b) without materialising the intersection.
            static auto count_and(const BitSet & a, const BitSet & b) -> int
            {
                int result = 0;
                for (std::size_t i = 0 ; i < a._words.size() ; ++i)
                    result += std::popcount(a._words[i] & b._words[i]);
                return result;
            }

            /// Index of the first set bit at or after from, or -1.
            auto find_next(int from) const -> int
            {
                if (from >= _size)
                    return -1;
                std::size_t w = from / 64;
                std::uint64_t word = _words[w] & (~std::uint64_t{0} << (from % 64));
                while (true) {
                    if (word)
                        return int(w * 64) + std::countr_zero(word);
                    if (++w >= _words.size())
                        return -1;
                    word = _words[w];
                }
            }

            auto first() const -> int { return find_next(0); }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    auto word = _words[w];
                    while (word) {
                        f(int(w * 64) + std::countr_zero(word));
                        word &= word - 1;
                    }
                }
            }

            auto to_indices() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                for_each([&] (int i) { result.push_back(i); });
                return result;
            }

            friend auto operator== (const BitSet &, const BitSet &) -> bool = default;
    };

    inline auto operator& (BitSet a, const BitSet & b) -> BitSet
    {
        return a &= b;
    }

    inline auto operator| (BitSet a, const BitSet & b) -> BitSet
    {
        return a |= b;
    }

    inline auto difference(BitSet a, const BitSet & b) -> BitSet
    {
        return a.subtract(b);
    }
}

#endif
