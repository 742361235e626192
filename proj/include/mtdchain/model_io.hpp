#ifndef MTDCHAIN_MODEL_IO_HPP
#define MTDCHAIN_MODEL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "mtdchain/model.hpp"

namespace mtdchain {

inline constexpr std::string_view kModelFormat = "mtdchain-model";
inline constexpr int kModelVersion = 1;

// JSON document:
//   format, version, order, states, orientation ("rows=to,columns=from"),
//   layout ("column-major"), lambda[k], transition_matrices[k]{lag, values[m*m]},
//   stationary_hat[m], lp_residual
// Doubles are written in shortest round-trip form, so load(save(m)) == m.
std::string model_to_json(const MtdModel& model);
MtdModel model_from_json(std::string_view text);

void save_model(const MtdModel& model, const std::filesystem::path& path);
MtdModel load_model(const std::filesystem::path& path);

}  // namespace mtdchain

#endif  // MTDCHAIN_MODEL_IO_HPP
