#include "core/errors.hpp"

#include <cstdio>

namespace dyncache {

namespace {

std::string describe(const std::string& bound, double limit, double value) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "out of validity: %s (limit %.6g, got %.6g)",
                bound.c_str(), limit, value);
  return buf;
}

}  // namespace

out_of_validity::out_of_validity(std::string bound, double limit, double value)
    : std::domain_error(describe(bound, limit, value)),
      bound_(std::move(bound)),
      limit_(limit),
      value_(value) {}

}  // namespace dyncache
