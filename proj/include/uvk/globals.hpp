#pragma once

#include "uvk/term.hpp"
#include "uvk/value.hpp"

#include <optional>
#include <unordered_map>

namespace uvk {

struct Declaration {
  std::string name;
  std::vector<std::string> levelParams;
  TermPtr type;  // closed core term; level variables come from levelParams
  TermPtr body;  // null for postulates
  std::string file;
  Span span;

  bool isPostulate() const { return body == nullptr; }
};

// Checked declarations in dependency order.  Definitions unfold transparently
// during evaluation; postulates are opaque neutral heads.  Evaluation results
// for instantiated globals are memoized per (name, level arguments).
class GlobalEnv {
public:
  const Declaration *find(const std::string &name) const;
  void insert(Declaration d);
  const std::vector<Declaration> &declarations() const { return order_; }

  struct Cached {
    ValuePtr type;
    ValuePtr value; // null for postulates until the neutral is built
  };
  mutable std::unordered_map<std::string, Cached> cache;

private:
  std::vector<Declaration> order_;
  std::unordered_map<std::string, size_t> index_;
};

} // namespace uvk
