#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testhelpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(FRAMEKIT_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

}  // namespace testhelpers
