#pragma once

#include <string>
#include <vector>

#include "wavedecay/manifest.hpp"

namespace wavedecay {

// Exit codes: 0 success, 2 usage error, 3 config parse failure, 4 blowup
// detected (the manifest carries the blowup time).
int dispatch(const std::vector<std::string>& args, RunManifest* manifest_out = nullptr);

}  // namespace wavedecay
