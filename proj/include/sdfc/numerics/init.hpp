#ifndef SDFC_NUMERICS_INIT_HPP
#define SDFC_NUMERICS_INIT_HPP

#include "sdfc/numerics/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace sdfc {

using Rng = std::mt19937_64;

// Uniform Xavier/Glorot init, shape (fan_out x fan_in), entries in
// [-sqrt(6/(fan_in+fan_out)), +sqrt(6/(fan_in+fan_out))].
Matrix xavier_init(std::size_t fan_in, std::size_t fan_out, Rng& rng);
Matrix xavier_init(std::size_t fan_in, std::size_t fan_out, std::uint64_t rng_seed);

double xavier_bound(std::size_t fan_in, std::size_t fan_out);

} // namespace sdfc

#endif // SDFC_NUMERICS_INIT_HPP
