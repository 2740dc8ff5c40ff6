#ifndef SDFC_DFC_CHECKPOINT_HPP
#define SDFC_DFC_CHECKPOINT_HPP

#include "sdfc/dfc/network.hpp"

#include <filesystem>
#include <string>

namespace sdfc {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
    NetworkParams params;
    std::string config_fingerprint;  // opaque; written and read back verbatim
};

// Little-endian binary: magic "SDFCCKPT", version, activations, layer sizes,
// fingerprint, then every W_i and R_i as (rows, cols, row-major doubles).
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);

// Throws ParseError on a bad magic, unknown version, truncation or shapes that
// do not chain.
Checkpoint load_checkpoint(const std::filesystem::path& path);

} // namespace sdfc

#endif // SDFC_DFC_CHECKPOINT_HPP
