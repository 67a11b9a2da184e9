#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace critgraph {

// Raised for any argument outside an operation's mathematical domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Philox4x32 with 10 rounds (Salmon et al., SC'11). Pure function of
// (counter, key); matches the Random123 known-answer vectors.
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// A deterministic random stream identified by (master_seed, stream_index).
///
/// The key is the master seed; the counter's upper 64 bits hold the stream
/// index and the lower 64 bits the block number within the stream. Streams
/// with distinct indices therefore never share a Philox block, and any
/// stream can be constructed directly without advancing another one. One
/// stream per Monte Carlo trial makes results independent of how trials are
/// scheduled across threads.
///
/// A stream is a value; copies replay the same sequence. Do not share one
/// instance between threads.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  std::uint64_t next_u64() noexcept {
    if (pos_ == 2) refill();
    return buffer_[pos_++];
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  std::uint64_t master_seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }
  std::uint64_t blocks_consumed() const noexcept { return block_; }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int pos_ = 2;
};

}  // namespace critgraph
