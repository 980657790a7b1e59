#include "bmseq/seq.hpp"

#include <stdexcept>
#include <string>

namespace bmseq {

Seq::Seq(long offset_, std::vector<Rat> values_) : offset(offset_), values(std::move(values_)) {
  if (values.empty()) throw std::invalid_argument("Seq: values must be nonempty");
}

const Rat& Seq::at(long i) const {
  if (i < first_index() || i > last_index())
    throw std::out_of_range("Seq: index " + std::to_string(i) + " outside [" +
                            std::to_string(first_index()) + ", " + std::to_string(last_index()) +
                            "]");
  return values[static_cast<std::size_t>(i - offset)];
}

Seq Seq::scaled(const Rat& c) const {
  Seq out = *this;
  for (auto& v : out.values) v *= c;
  return out;
}

}  // namespace bmseq
