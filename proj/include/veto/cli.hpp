#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "veto/core.hpp"
#include "veto/semantics.hpp"

namespace veto::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kTimeout = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDomain = 65;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ClassSpec {
  SemanticsTag tag = SemanticsTag::veto;
  FlavorSet flavor;
  int mark_count = 0;  // 0 = default for the tag
};

/// VI, UVI, PVI, MVI, MUVI, MPVI, SA, DA, PC, IG, double-veto, or `<tag>[+flavor[,flavor]]`.
ClassSpec parse_class(std::string_view text);

/// `600s`, `10m`, `250ms`, `1h`, or plain seconds.
long long parse_budget_ms(std::string_view text);

}  // namespace veto::cli
