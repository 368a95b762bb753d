#include "lapint/builder.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lapint/graph6.hpp"

namespace lapint {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Graph parse_all() {
    Graph g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected input");
    return g;
  }

  FamilyConfig config_all() {
    skip_ws();
    std::string w = word();
    if (w != "g1" && w != "g2") fail("expected g1 or g2");
    FamilyConfig cfg = config(w);
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected input");
    return cfg;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw BuilderError("builder: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      unsigned char ch = static_cast<unsigned char>(s_[pos_]);
      if (std::isalnum(ch) || ch == '_' || (ch == '-' && pos_ > start)) {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string peek_word() {
    std::size_t save = pos_;
    std::string w = word();
    pos_ = save;
    return w;
  }

  std::size_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  // INT ("," INT)*, where a comma only continues the list when a digit follows it.
  std::vector<std::size_t> integer_list() {
    std::vector<std::size_t> out{integer()};
    while (true) {
      std::size_t save = pos_;
      if (!peek(',')) break;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        out.push_back(integer());
      } else {
        pos_ = save;
        break;
      }
    }
    return out;
  }

  Graph expr() {
    Graph g = term();
    if (peek_word() == "x") {
      word();
      g = copies(g, integer());
    }
    return g;
  }

  Graph term() {
    std::string w = word();
    if (w.empty()) fail("expected a graph");
    if (w == "join" || w == "union" || w == "product") {
      expect('(');
      Graph acc = expr();
      while (peek(',')) {
        ++pos_;
        Graph next = expr();
        if (w == "join") acc = join(acc, next);
        else if (w == "union") acc = disjoint_union(acc, next);
        else acc = cartesian_product(acc, next);
      }
      expect(')');
      return acc;
    }
    // "K5" is shorthand for "K 5".
    if (w.size() > 1 && std::string("KPCE").find(w[0]) != std::string::npos &&
        w.find_first_not_of("0123456789", 1) == std::string::npos) {
      pos_ -= w.size() - 1;
      w = w.substr(0, 1);
    }
    try {
      if (w == "K" || w == "complete") return complete(integer());
      if (w == "P" || w == "path") return path(integer());
      if (w == "C" || w == "cycle") return cycle(integer());
      if (w == "E" || w == "empty") return empty_graph(integer());
      if (w == "star") return star(integer());
      if (w == "bipartite") {
        std::size_t a = integer();
        return complete_bipartite(a, integer());
      }
      if (w == "firefly") {
        std::size_t r = integer();
        std::size_t s = integer();
        return firefly(r, s, integer());
      }
      if (w == "gamma101") return gamma_101();
      if (w == "g6") return from_graph6(graph6_token());
      if (w == "g1" || w == "g2") return realize(config(w));
    } catch (const BuilderError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    fail("unknown graph '" + w + "'");
  }

  std::string graph6_token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= 63 && s_[pos_] <= 126) ++pos_;
    if (start == pos_) fail("expected a graph6 string");
    return std::string(s_.substr(start, pos_ - start));
  }

  FamilyConfig config(const std::string& kind) {
    FamilyConfig cfg;
    cfg.family = kind == "g1" ? Family::G1 : Family::G2;
    const std::map<std::string, std::function<std::vector<std::size_t>&()>> keys = {
        {"path-orders", [&]() -> auto& { return cfg.internal_paths; }},
        {"cycles", [&]() -> auto& { return cfg.u.cycles; }},
        {"pendants", [&]() -> auto& { return cfg.u.pendants; }},
        {"cycles-u", [&]() -> auto& { return cfg.u.cycles; }},
        {"pendants-u", [&]() -> auto& { return cfg.u.pendants; }},
        {"cycles-v", [&]() -> auto& { return cfg.v.cycles; }},
        {"pendants-v", [&]() -> auto& { return cfg.v.pendants; }},
    };
    while (true) {
      std::string w = peek_word();
      if (w == "hub-edge") {
        word();
        cfg.hub_edge = true;
        continue;
      }
      auto it = keys.find(w);
      if (it == keys.end()) break;
      word();
      expect('=');
      auto& target = it->second();
      for (std::size_t x : integer_list()) target.push_back(x);
    }
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    return cfg.normalized();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph build_graph(std::string_view expr) { return Parser(expr).parse_all(); }

FamilyConfig parse_family_config(std::string_view expr) { return Parser(expr).config_all(); }

}  // namespace lapint
