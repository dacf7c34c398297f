#include "wavedecay/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "wavedecay/errors.hpp"

namespace wavedecay {

std::string RunManifest::json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["config_hash"] = config_hash;
    doc["outputs"] = outputs;
    doc["timings_seconds"] = nlohmann::json::object();
    for (const auto& [name, sec] : timings_seconds) doc["timings_seconds"][name] = sec;
    return doc.dump(2) + "\n";
}

void RunManifest::write(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error(Errc::io_error, "cannot open for writing: " + path);
    os << json();
    if (!os) throw Error(Errc::io_error, "write failed: " + path);
}

}  // namespace wavedecay
