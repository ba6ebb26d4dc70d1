#include "polylab/candidates.hpp"

#include "polylab/error.hpp"

namespace polylab {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CandidateBox CandidateBox::make(int k, const BigRational& M) {
  if (k < 1) throw InvalidArgument("candidate degree must be >= 1");
  if (M < 1) throw InvalidArgument("root bound M must be >= 1");
  CandidateBox box{k, M, {}};
  BigRational power = 1;
  for (int j = 1; j <= k; ++j) {
    power *= M;
    const BigRational v = BigRational(binomial(k, j)) * power;
    box.per_degree_bounds.push_back(numerator(v) / denominator(v));
  }
  return box;
}

BigInt CandidateBox::cardinality() const {
  BigInt c = 1;
  for (const auto& b : per_degree_bounds) c *= 2 * b + 1;
  return c;
}

CandidateStream::CandidateStream(CandidateBox box, std::optional<std::vector<BigInt>> constant_terms)
    : box_(std::move(box)), constant_terms_(std::move(constant_terms)) {
  current_.resize(static_cast<std::size_t>(box_.k));
  for (int i = 0; i < box_.k; ++i) current_[i] = -box_.coefficient_bound(i);
  if (constant_terms_) {
    if (constant_terms_->empty()) {
      exhausted_ = true;
    } else {
      current_[0] = constant_terms_->front();
    }
  }
}

BigInt CandidateStream::predicted_count() const {
  if (!constant_terms_) return box_.cardinality();
  BigInt c = constant_terms_->size();
  for (int i = 1; i < box_.k; ++i) c *= 2 * box_.coefficient_bound(i) + 1;
  return c;
}

std::optional<IntPoly> CandidateStream::next() {
  if (exhausted_) return std::nullopt;
  if (started_) {
    // Advance the odometer; c_0 is the fastest digit.
    std::size_t i = 0;
    for (; i < current_.size(); ++i) {
      if (i == 0 && constant_terms_) {
        if (++constant_index_ < constant_terms_->size()) {
          current_[0] = (*constant_terms_)[constant_index_];
          break;
        }
        constant_index_ = 0;
        current_[0] = constant_terms_->front();
        continue;
      }
      const BigInt& b = box_.coefficient_bound(static_cast<int>(i));
      if (current_[i] < b) {
        ++current_[i];
        break;
      }
      current_[i] = -b;
    }
    if (i == current_.size()) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  started_ = true;
  std::vector<BigInt> c(current_);
  c.emplace_back(1);
  return IntPoly(std::move(c));
}

CandidateStream enumerate_candidates(int k, const BigRational& M, const BigInt& ceiling) {
  CandidateBox box = CandidateBox::make(k, M);
  BigInt count = box.cardinality();
  if (count > ceiling) throw CeilingExceeded(count, ceiling);
  return CandidateStream(std::move(box));
}

}  // namespace polylab
