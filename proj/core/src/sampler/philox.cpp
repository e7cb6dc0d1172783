/*
   Copyright 2026 The pershlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pershlab/sampler/philox.hpp"

#include <cmath>
#include <numbers>

#include "pershlab/error.hpp"

namespace pershlab::sampler {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline double unit_open_closed(std::uint32_t hi, std::uint32_t lo)
{
    // (0, 1] with 53 random bits
    const std::uint64_t x = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return (static_cast<double>(x) + 1.0) * 0x1.0p-53;
}

inline double unit_closed_open(std::uint32_t hi, std::uint32_t lo)
{
    const std::uint64_t x = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(x) * 0x1.0p-53;
}

} // namespace

PhiloxCounter philox4x32_10(PhiloxCounter c, PhiloxKey k)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kW0;
            k[1] += kW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kM0, c[0], hi0, lo0);
        mulhilo(kM1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t path, std::uint32_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      path_lo_(static_cast<std::uint32_t>(path)),
      path_hi_(static_cast<std::uint32_t>(path >> 32)),
      stream_(stream)
{
}

void NormalStream::fill(std::span<double> out, std::uint64_t offset) const
{
    std::size_t i = 0;
    std::uint64_t index = offset;
    while (i < out.size()) {
        const std::uint64_t block = index / 2;
        if (block > 0xFFFFFFFFull) {
            throw ArgumentError("normal stream exhausted");
        }
        const PhiloxCounter r =
            philox4x32_10({static_cast<std::uint32_t>(block), path_lo_, path_hi_, stream_}, key_);
        const double u1 = unit_open_closed(r[0], r[1]);
        const double u2 = unit_closed_open(r[2], r[3]);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        const double pair[2] = {radius * std::cos(angle), radius * std::sin(angle)};
        for (std::uint64_t j = index % 2; j < 2 && i < out.size(); ++j) {
            out[i++] = pair[j];
            ++index;
        }
    }
}

} // namespace pershlab::sampler
