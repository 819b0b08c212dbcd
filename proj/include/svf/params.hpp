#pragma once

#include <string>

#include "json.hpp"
#include "svf/model.hpp"

namespace svf {

using ordered_json = nlohmann::ordered_json;

// Parameter file schema (all scalars as rational strings):
//   {
//     "c": "1",
//     "u": ["1", "0"],                      // optional, default []
//     "v": ["1/2"],                         // optional, default []
//     "vectors": {"n": ["0","1"], "e": ["1","0"],
//                 "s": ["1","0"], "w": ["0","1"]},
//     "split": [n, m]                       // optional
//   }
// InputError on malformed JSON, bad rationals, or c = 0.
ModelParams params_from_json(const std::string& text);

ordered_json params_to_json(const ModelParams& params);

}  // namespace svf
