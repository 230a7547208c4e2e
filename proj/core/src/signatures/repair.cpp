#include "rnnids/signatures/repair.hpp"

#include <vector>

#include "rnnids/error.hpp"
#include "rnnids/signatures/regex_parser.hpp"

namespace rnnids::signatures {

namespace {

std::string strip_slashes(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      out += s[i];
      out += s[++i];
    } else if (s[i] != '/') {
      out += s[i];
    }
  }
  return out;
}

void drop_dangling_backslash(std::string& s) {
  std::size_t run = 0;
  while (run < s.size() && s[s.size() - 1 - run] == '\\') ++run;
  if (run % 2 == 1) s.pop_back();
}

// Closers for whatever is still open at the end, innermost first.
std::string pending_closers(std::string_view s) {
  std::vector<char> open;
  bool in_class = false;
  std::size_t first_member = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (in_class) {
      // ']' right after '[' or '[^' is a member, not the end
      if (c == ']' && i != first_member) {
        in_class = false;
        open.pop_back();
      }
      continue;
    }
    if (c == '[') {
      in_class = true;
      first_member = i + 1 < s.size() && s[i + 1] == '^' ? i + 2 : i + 1;
      open.push_back(']');
    } else if (c == '(') {
      open.push_back(')');
    } else if (c == ')' && !open.empty()) {
      open.pop_back();
    }
  }
  return {open.rbegin(), open.rend()};
}

}  // namespace

std::string repair_generated(std::string_view raw) {
  std::string s = strip_slashes(raw);
  drop_dangling_backslash(s);
  s += pending_closers(s);
  try {
    parse_regex(s);
  } catch (const RegexSyntaxError& e) {
    throw UnrepairableOutput(s, e);
  }
  return s;
}

}  // namespace rnnids::signatures
