#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "topkgan/gan.hpp"
#include "topkgan/nn.hpp"

namespace topkgan {

inline constexpr std::string_view kCheckpointMagic = "topkgan-ckpt";
inline constexpr std::string_view kCheckpointVersion = "v1";

/// Unreadable, truncated, mis-shaped or wrong-version checkpoint data.
class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);
double parse_double(std::string_view text);

/// Writes `topkgan-ckpt v1 <role> <d0>x<d1>x...` followed by one block per
/// layer: the weight rows (row-major, one row per line), then the bias line.
/// Blocks are separated by a blank line.
void write_layer_block(std::ostream& out, std::string_view role, const LayerStack& layers);

/// Reads a block written by write_layer_block and checks its role.
LayerStack read_layer_block(std::istream& in, std::string_view expected_role);

/// Full training state: both networks, both Adam states, k, iteration and rng.
std::string serialize_checkpoint(const TrainState& state);
TrainState parse_checkpoint(const std::string& text);

void checkpoint_save(const TrainState& state, const std::filesystem::path& path);
TrainState checkpoint_load(const std::filesystem::path& path);

}  // namespace topkgan
