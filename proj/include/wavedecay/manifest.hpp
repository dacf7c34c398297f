#pragma once

#include <string>
#include <vector>

namespace wavedecay {

// Record of one CLI run: command echo, config hash, every artifact written,
// and wall-clock timings.  Serialized as JSON next to the outputs.
struct RunManifest {
    std::string command;
    std::string config_hash;
    std::vector<std::string> outputs;
    std::vector<std::pair<std::string, double>> timings_seconds;

    void add_output(const std::string& path) { outputs.push_back(path); }
    std::string json() const;
    void write(const std::string& path) const;
};

}  // namespace wavedecay
