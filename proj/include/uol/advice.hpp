#pragma once

// Random advice: an infinite bit sequence derived from a 64-bit seed, split
// into columns so that round k of a game reads only column k.
//
// bit(p) is bit (p mod 64) of splitmix64(seed ^ splitmix64(p div 64)).
// Column k is the subsequence at positions cantor_pair(k, 0), cantor_pair(k, 1), ...

#include <cstdint>
#include <string>

#include "uol/learner.hpp"

namespace uol {

class AdviceStream {
 public:
  explicit AdviceStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  Label bit(std::uint64_t position) const;
  /// Position of the i-th bit of column k.
  static std::uint64_t column_position(std::uint64_t k, std::uint64_t i);
  Label column_bit(std::uint64_t k, std::uint64_t i) const { return bit(column_position(k, i)); }

  /// An independent stream for Monte Carlo trial i, seeded from column i.
  AdviceStream trial(std::uint64_t i) const;

 private:
  std::uint64_t seed_;
};

/// Reads one column of a stream from its start.
class ColumnReader final : public AdviceReader {
 public:
  ColumnReader(const AdviceStream& stream, std::uint64_t k) : stream_(stream), k_(k) {}
  Label next_bit() override { return stream_.column_bit(k_, read_++); }
  std::uint64_t bits_read() const override { return read_; }

 private:
  const AdviceStream& stream_;
  std::uint64_t k_;
  std::uint64_t read_ = 0;
};

/// Reads a finite word; asking past its end throws AdviceExhausted.
class PrefixReader final : public AdviceReader {
 public:
  explicit PrefixReader(std::string bits) : bits_(std::move(bits)) {}
  Label next_bit() override;
  std::uint64_t bits_read() const override { return read_; }

 private:
  std::string bits_;
  std::uint64_t read_ = 0;
};

}  // namespace uol
