#include "gpcx/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gpcx {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

PresentationGraph::PresentationGraph(
    std::vector<std::pair<std::string, Order>> generators,
    std::vector<std::pair<std::string, std::string>> relations) {
  if (static_cast<int>(generators.size()) > kMaxGenerators) {
    throw ParseError(0, "too many generators (cap " +
                            std::to_string(kMaxGenerators) + ")");
  }
  for (auto& [name, order] : generators) {
    if (!valid_name(name)) throw ParseError(0, "bad generator name '" + name + "'");
    if (find(name) >= 0) throw ParseError(0, "duplicate generator '" + name + "'");
    names_.push_back(name);
    orders_.push_back(order);
  }
  adj_.assign(names_.size(), 0);
  for (auto& [a, b] : relations) {
    int ga = find(a);
    int gb = find(b);
    if (ga < 0) throw ParseError(0, "relation references unknown generator '" + a + "'");
    if (gb < 0) throw ParseError(0, "relation references unknown generator '" + b + "'");
    if (ga == gb) throw ParseError(0, "self-loop relation on '" + a + "'");
    adj_[ga] |= uint64_t{1} << gb;
    adj_[gb] |= uint64_t{1} << ga;
  }
  for (int g = 0; g < size(); ++g) {
    alphabet_.push_back({static_cast<uint8_t>(g), +1});
    if (orders_[g] == Order::Infinite) {
      alphabet_.push_back({static_cast<uint8_t>(g), -1});
    }
  }
  valence_ = static_cast<int>(alphabet_.size());
}

int PresentationGraph::find(const std::string& generator_name) const {
  for (int g = 0; g < size(); ++g) {
    if (names_[g] == generator_name) return g;
  }
  return -1;
}

PresentationGraph parse_presentation(std::istream& in) {
  std::vector<std::pair<std::string, Order>> gens;
  std::vector<std::pair<std::string, std::string>> rels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive)) continue;
    if (directive == "gen") {
      std::string name, order;
      if (!(fields >> name >> order)) {
        throw ParseError(lineno, "expected 'gen <name> <2|inf>'");
      }
      if (!valid_name(name)) {
        throw ParseError(lineno, "bad generator name '" + name + "'");
      }
      Order o;
      if (order == "2") {
        o = Order::Two;
      } else if (order == "inf") {
        o = Order::Infinite;
      } else {
        throw ParseError(lineno, "order must be '2' or 'inf', got '" + order + "'");
      }
      for (auto& [existing, _] : gens) {
        if (existing == name) {
          throw ParseError(lineno, "duplicate generator '" + name + "'");
        }
      }
      gens.emplace_back(name, o);
    } else if (directive == "rel") {
      std::string a, b;
      if (!(fields >> a >> b)) {
        throw ParseError(lineno, "expected 'rel <name> <name>'");
      }
      auto known = [&](const std::string& n) {
        for (auto& [existing, _] : gens) {
          if (existing == n) return true;
        }
        return false;
      };
      if (!known(a)) throw ParseError(lineno, "unknown generator '" + a + "'");
      if (!known(b)) throw ParseError(lineno, "unknown generator '" + b + "'");
      if (a == b) throw ParseError(lineno, "self-loop relation on '" + a + "'");
      rels.emplace_back(a, b);
    } else {
      throw ParseError(lineno, "unknown directive '" + directive + "'");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw ParseError(lineno, "trailing text '" + trailing + "'");
    }
  }
  if (gens.empty()) throw ParseError(lineno, "no generators declared");
  return PresentationGraph(std::move(gens), std::move(rels));
}

PresentationGraph parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_presentation(in);
}

Word parse_word(const PresentationGraph& g, const std::string& text) {
  Word w;
  std::istringstream fields(text);
  std::string token;
  while (fields >> token) {
    int8_t sign = +1;
    std::string name = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      if (token.substr(caret) != "^-1") {
        throw ParseError(0, "bad exponent in '" + token + "' (only ^-1)");
      }
      name = token.substr(0, caret);
      sign = -1;
    }
    int gen = g.find(name);
    if (gen < 0) throw ParseError(0, "unknown generator '" + name + "'");
    if (g.involution(gen)) sign = +1;
    w.push_back({static_cast<uint8_t>(gen), sign});
  }
  return w;
}

std::string letter_to_string(const PresentationGraph& g, Letter x) {
  std::string s = g.name(x.gen);
  if (x.sign < 0) s += "^-1";
  return s;
}

std::string word_to_string(const PresentationGraph& g, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += letter_to_string(g, w[i]);
  }
  return s;
}

}  // namespace gpcx
