#include "groupeq/system_parser.hpp"

#include "groupeq/group_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace groupeq {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct RawToken {
  std::string name;       // identifier, or twist tag when is_twist
  std::string twist_var;  // variable inside twist(...)
  bool is_twist = false;
  bool inverted = false;
};

// One word: identifiers with optional ^-1, and twist(tag, X) forms that
// may contain spaces.
std::vector<RawToken> scan_word(const std::string& text, int line_no) {
  std::vector<RawToken> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_ident = [&]() -> std::string {
    size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    if (start == pos) throw ParseError(line_no, "expected an identifier");
    return text.substr(start, pos - start);
  };
  auto read_inverse_suffix = [&]() -> bool {
    if (pos + 2 < text.size() + 1 && text.compare(pos, 3, "^-1") == 0) {
      pos += 3;
      return true;
    }
    return false;
  };
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    RawToken tok;
    if (text.compare(pos, 6, "twist(") == 0) {
      pos += 6;
      tok.is_twist = true;
      skip_ws();
      tok.name = read_ident();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',')
        throw ParseError(line_no, "expected ',' in twist(tag, X)");
      ++pos;
      skip_ws();
      tok.twist_var = read_ident();
      bool inner_inv = read_inverse_suffix();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw ParseError(line_no, "expected ')' in twist(tag, X)");
      ++pos;
      bool outer_inv = read_inverse_suffix();
      tok.inverted = inner_inv != outer_inv;
    } else if (text[pos] == '=') {
      ++pos;
      tok.name = "=";
    } else {
      tok.name = read_ident();
      tok.inverted = read_inverse_suffix();
    }
    out.push_back(std::move(tok));
  }
  return out;
}

EqWord tokens_to_word(const std::vector<RawToken>& toks, const System& sys, const GroupEnv& env,
                      int line_no) {
  EqWord word;
  for (const auto& t : toks) {
    if (t.is_twist) {
      if (!sys.declared(t.twist_var))
        throw ParseError(line_no, "unknown variable '" + t.twist_var + "' in twist");
      auto it = env.structure.automorphisms.find(t.name);
      if (it == env.structure.automorphisms.end())
        throw ParseError(line_no, "unknown twist tag '" + t.name + "'");
      Occurrence o;
      o.var = t.twist_var;
      o.exponent = t.inverted ? -1 : 1;
      o.twist = it->second;
      o.twist_tag = t.name;
      word.push_back(std::move(o));
      continue;
    }
    if (sys.declared(t.name)) {
      Occurrence o;
      o.var = t.name;
      o.exponent = t.inverted ? -1 : 1;
      word.push_back(std::move(o));
      continue;
    }
    auto it = env.labels.find(t.name);
    if (it == env.labels.end())
      throw ParseError(line_no, "unknown variable or label '" + t.name + "'");
    word.push_back(t.inverted ? ginv(env.structure, it->second) : it->second);
  }
  return word;
}

}  // namespace

System parse_system(const std::string& text, const GroupEnv& env) {
  System sys;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::string>> pending_words;  // (line, rest) for eq/neq
  std::vector<bool> pending_is_eq;
  std::vector<std::pair<int, std::string>> pending_constraints;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (directive == "vars") {
      std::istringstream vs(rest);
      std::string v;
      while (vs >> v) {
        for (char c : v)
          if (!ident_char(c)) throw ParseError(line_no, "bad variable name '" + v + "'");
        sys.declare(v);
      }
    } else if (directive == "eq" || directive == "neq") {
      pending_words.emplace_back(line_no, rest);
      pending_is_eq.push_back(directive == "eq");
    } else if (directive == "constrain") {
      pending_constraints.emplace_back(line_no, rest);
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }
  for (const auto& [ln, rest] : pending_constraints) {
    std::istringstream cs(rest);
    std::string var, kw, name;
    if (!(cs >> var >> kw >> name) || kw != "in")
      throw ParseError(ln, "expected: constrain X in <recset-name>");
    if (!sys.declared(var)) throw ParseError(ln, "unknown variable '" + var + "'");
    auto it = env.recsets.find(name);
    if (it == env.recsets.end())
      throw ParseError(ln, "unknown recognisable set '" + name + "'");
    sys.constraints[var] = it->second;
  }
  // Words are resolved after all vars lines have been seen.
  for (size_t i = 0; i < pending_words.size(); ++i) {
    const auto& [ln, rest] = pending_words[i];
    auto toks = scan_word(rest, ln);
    auto eq_pos = std::find_if(toks.begin(), toks.end(),
                               [](const RawToken& t) { return !t.is_twist && t.name == "="; });
    EqWord word;
    if (eq_pos == toks.end()) {
      word = tokens_to_word(toks, sys, env, ln);
    } else {
      // u = v  ~~>  u v^-1
      std::vector<RawToken> lhs(toks.begin(), eq_pos), rhs(eq_pos + 1, toks.end());
      word = tokens_to_word(lhs, sys, env, ln);
      EqWord rhs_word = tokens_to_word(rhs, sys, env, ln);
      EqWord inv = word_inverse(env.structure, rhs_word);
      word.insert(word.end(), inv.begin(), inv.end());
    }
    if (pending_is_eq[i])
      sys.equations.push_back(std::move(word));
    else
      sys.inequations.push_back(std::move(word));
  }
  validate_system(env.structure, sys);
  return sys;
}

namespace {

std::string token_to_text(const Token& tok, const GroupEnv& env) {
  if (const auto* o = std::get_if<Occurrence>(&tok)) {
    std::string inv = o->exponent < 0 ? "^-1" : "";
    if (o->twist) {
      if (o->twist_tag.empty())
        throw std::invalid_argument("print_system: twist without a registry tag");
      return "twist(" + o->twist_tag + ", " + o->var + ")" + inv;
    }
    return o->var + inv;
  }
  const auto& c = std::get<GroupValue>(tok);
  for (const auto& [label, v] : env.labels) {
    if (value_eq(v, c)) return label;
    if (value_eq(v, ginv(env.structure, c))) return label + "^-1";
  }
  throw std::invalid_argument("print_system: constant has no label");
}

}  // namespace

std::string print_system(const System& s, const GroupEnv& env) {
  std::ostringstream os;
  os << "vars";
  for (const auto& v : s.variables) os << " " << v;
  os << "\n";
  for (const auto& w : s.equations) {
    os << "eq";
    for (const auto& t : w) os << " " << token_to_text(t, env);
    os << "\n";
  }
  for (const auto& w : s.inequations) {
    os << "neq";
    for (const auto& t : w) os << " " << token_to_text(t, env);
    os << "\n";
  }
  for (const auto& [var, set] : s.constraints) {
    std::string name;
    nlohmann::json want = recset_to_json(env.structure, set);
    for (const auto& [n, rs] : env.recsets)
      if (recset_to_json(env.structure, rs) == want) {
        name = n;
        break;
      }
    if (name.empty()) throw std::invalid_argument("print_system: constraint set is not named");
    os << "constrain " << var << " in " << name << "\n";
  }
  return os.str();
}

bool system_equal(const System& a, const System& b) {
  auto words_equal = [](const EqWord& x, const EqWord& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].index() != y[i].index()) return false;
      if (const auto* cx = std::get_if<GroupValue>(&x[i])) {
        if (!value_eq(*cx, std::get<GroupValue>(y[i]))) return false;
      } else {
        const auto& ox = std::get<Occurrence>(x[i]);
        const auto& oy = std::get<Occurrence>(y[i]);
        if (ox.var != oy.var || ox.exponent != oy.exponent || !aut_equal(ox.twist, oy.twist))
          return false;
      }
    }
    return true;
  };
  if (a.variables != b.variables) return false;
  if (a.equations.size() != b.equations.size() ||
      a.inequations.size() != b.inequations.size())
    return false;
  for (size_t i = 0; i < a.equations.size(); ++i)
    if (!words_equal(a.equations[i], b.equations[i])) return false;
  for (size_t i = 0; i < a.inequations.size(); ++i)
    if (!words_equal(a.inequations[i], b.inequations[i])) return false;
  if (a.constraints.size() != b.constraints.size()) return false;
  for (auto ita = a.constraints.begin(), itb = b.constraints.begin(); ita != a.constraints.end();
       ++ita, ++itb)
    if (ita->first != itb->first || ita->second.boxes.size() != itb->second.boxes.size())
      return false;
  return true;
}

}  // namespace groupeq
