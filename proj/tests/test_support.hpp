#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Shared helpers for the test binaries.
namespace testsup {

inline std::string source_dir() {
    const char* d = std::getenv("WD_SOURCE_DIR");
    return d ? d : ".";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testsup
