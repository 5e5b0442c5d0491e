#include "uol/advice.hpp"

#include "uol/progmodel.hpp"
#include "uol/random.hpp"

namespace uol {

Label AdviceStream::bit(std::uint64_t position) const {
  std::uint64_t word = splitmix64(seed_ ^ splitmix64(position / 64));
  return static_cast<Label>((word >> (position % 64)) & 1U);
}

std::uint64_t AdviceStream::column_position(std::uint64_t k, std::uint64_t i) {
  return cantor_pair_u64(k, i);
}

AdviceStream AdviceStream::trial(std::uint64_t i) const {
  std::uint64_t s = 0;
  for (std::uint64_t b = 0; b < 64; ++b) s |= static_cast<std::uint64_t>(column_bit(i, b)) << b;
  return AdviceStream(s);
}

Label PrefixReader::next_bit() {
  if (read_ >= bits_.size()) throw AdviceExhausted();
  return bits_[read_++] == '1' ? 1 : 0;
}

}  // namespace uol
