#ifndef PPK_IO_UTIL_HH
#define PPK_IO_UTIL_HH 1

#include <string>

namespace ppk
{
    auto read_file(const std::string & path) -> std::string;

    /// Writes to "<path>.tmp" and renames over path, so readers never see a
    /// partial file.
    auto write_file_atomically(const std::string & path, const std::string & contents) -> void;
}

#endif
