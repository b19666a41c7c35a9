#include "streamrec/stream.hpp"

#include <sstream>

namespace streamrec {

void SpaceMeter::release(std::uint64_t words) {
  if (words > current_) throw std::logic_error("space meter released more than it holds");
  current_ -= words;
}

InputString parse_input_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string key;
  if (!(in >> key) || key != "n:") {
    throw std::invalid_argument("input string must start with 'n: <integer>'");
  }
  long long n = -1;
  if (!(in >> n) || n < 0) throw std::invalid_argument("input length must be a nonnegative integer");

  InputString out;
  out.declared_length = static_cast<std::size_t>(n);
  std::string tok;
  while (in >> tok) out.tokens.push_back(tok);
  if (out.tokens.size() != out.declared_length) {
    throw LengthMismatch("declared n = " + std::to_string(n) + " but found " +
                         std::to_string(out.tokens.size()) + " tokens");
  }
  return out;
}

}  // namespace streamrec
