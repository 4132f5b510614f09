#include <ppk/io_util.hh>
#include <ppk/errors.hh>

#include <cstdio>
#include <fstream>
#include <sstream>

using std::string;

namespace ppk
{
    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open '" + path + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto write_file_atomically(const string & path, const string & contents) -> void
    {
        string tmp = path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw Error("cannot open '" + tmp + "' for writing");
            out << contents;
            if (! out.flush())
                throw Error("write to '" + tmp + "' failed");
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw Error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}
