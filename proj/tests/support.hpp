#pragma once

#include "doctest.h"
#include "fmm/lattice.hpp"
#include "oracles.hpp"

namespace support {

inline fmm::FuzzyVector vec(const oracle::Vec& v) { return fmm::FuzzyVector(v); }

inline fmm::FundamentalMemorySet set(const oracle::Set& A) {
  std::vector<fmm::FuzzyVector> out;
  for (const auto& a : A) out.emplace_back(a);
  return fmm::FundamentalMemorySet(std::move(out));
}

inline oracle::Set raw(const fmm::FundamentalMemorySet& A) {
  oracle::Set out;
  for (const auto& a : A) out.push_back(a.raw());
  return out;
}

inline void check_close(const oracle::Vec& got, const oracle::Vec& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    INFO("component " << i << ": got " << got[i] << " want " << want[i]);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

inline oracle::Set random_set(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  oracle::Set A;
  for (std::size_t i = 0; i < k; ++i) A.push_back(oracle::random_vec(rng, n));
  return A;
}

}  // namespace support
