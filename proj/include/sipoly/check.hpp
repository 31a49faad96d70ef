#pragma once

#include <stdexcept>
#include <string>

// Internal invariant check; failures indicate a bug, not bad input.
#define SIPOLY_CHECK(cond, msg)                                                       \
  do {                                                                                \
    if (!(cond))                                                                      \
      throw std::logic_error(std::string("internal check failed (") + __func__ +      \
                             "): " + (msg));                                          \
  } while (0)
