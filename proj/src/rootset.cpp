#include "excsym/rootset.hpp"

#include <cstdio>
#include <stdexcept>

namespace excsym {

std::string PosMask::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(words[1]),
                static_cast<unsigned long long>(words[0]));
  return buf;
}

PosMask PosMask::from_hex(const std::string& s) {
  if (s.size() != 32 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw std::invalid_argument("mask must be 32 lowercase hex digits");
  PosMask m;
  m.words[1] = std::stoull(s.substr(0, 16), nullptr, 16);
  m.words[0] = std::stoull(s.substr(16), nullptr, 16);
  return m;
}

}  // namespace excsym
