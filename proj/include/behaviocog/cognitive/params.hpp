#pragma once

#include <string>

namespace behaviocog {

// Public parameters shared by the cognitive and biometric halves of the scheme.
struct SchemeParams {
  int d = 5;       // response-space size, responses live in Z_d
  int k = 14;      // number of pass-objects in a secret
  int l = 30;      // objects shown per challenge
  int n = 180;     // global object pool size
  int gamma = 2;   // rounds per authentication session
  int t = 10;      // registration renderings per symbol

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Validated construction; throws ConfigError on any violated bound.
SchemeParams new_params(int d, int k, int l, int n, int gamma = 1, int t = 1);

void validate(const SchemeParams& params);

/// "(d, k, l, n)" for tables and messages.
std::string to_string(const SchemeParams& params);

}  // namespace behaviocog
