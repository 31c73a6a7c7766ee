#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nearfac/near_factorization.hpp"

namespace nearfac {

// A published near-factorization, with elements in textual form.
struct Fixture {
  std::string name;
  std::string group;
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::string note;  // transcription corrections, if any
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(std::string_view name);  // DomainError if unknown
NearFactorization load(const Fixture& f);
NearFactorization load_fixture(std::string_view name);

}  // namespace nearfac
