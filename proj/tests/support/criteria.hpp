#pragma once

#include <cstdarg>
#include <cstdio>

// One pass/fail line per acceptance criterion, printed unconditionally so a
// verbose test log reads as a scorecard.
inline void criterion_line(int num, bool pass, const char* fmt, ...) {
  std::printf("criterion %2d [%s] ", num, pass ? "PASS" : "FAIL");
  va_list ap;
  va_start(ap, fmt);
  std::vprintf(fmt, ap);
  va_end(ap);
  std::printf("\n");
  std::fflush(stdout);
}
