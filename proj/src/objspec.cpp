#include "clusterhall/objspec.hpp"

#include <cctype>

#include "clusterhall/error.hpp"

namespace clusterhall {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 9) throw InvalidInput("bad number in '" + context + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad number in '" + context + "'");
  return std::stoi(s);
}

int parse_vertex(const Context& ctx, const std::string& s, const std::string& term) {
  const int v = parse_int(s, term);
  if (v < 1 || v > ctx.n()) throw InvalidInput("vertex out of range in '" + term + "'");
  return v - 1;
}

CCObject parse_term(const Category& cat, const std::string& term) {
  const Context& ctx = cat.context();
  if (term == "0") return CCObject::zero(ctx);
  if (term.rfind("root:", 0) == 0) {
    std::string body = trim(term.substr(5));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw InvalidInput("root needs the form root:[d1,...,dn]: '" + term + "'");
    body = body.substr(1, body.size() - 2);
    IntVector d;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      d.push_back(parse_int(trim(body.substr(start, comma - start)), term));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(d.size()) != ctx.n()) throw InvalidInput("root has the wrong length: '" + term + "'");
    const auto k = ctx.find_root(d);
    if (!k) throw InvalidInput(to_string(d) + " is not a positive root");
    return CCObject::of_root(ctx, *k);
  }
  if (term.rfind("SP", 0) == 0) return CCObject::of_shifted(ctx, parse_vertex(ctx, term.substr(2), term));
  if (term.size() >= 2) {
    const int v = term[0] == 'S' || term[0] == 'P' || term[0] == 'I' ? parse_vertex(ctx, term.substr(1), term) : -1;
    if (term[0] == 'S') return CCObject::of_root(ctx, ctx.root_index(unit_vector(ctx.n(), v)));
    if (term[0] == 'P') return CCObject::of_root(ctx, ctx.projective(v));
    if (term[0] == 'I') return CCObject::of_root(ctx, ctx.injective(v));
  }
  throw InvalidInput("unknown object '" + term + "'");
}

}  // namespace

CCObject parse_object(const Category& cat, const std::string& spec) {
  CCObject out = CCObject::zero(cat.context());
  int depth = 0;
  std::size_t start = 0;
  const std::string s = spec + "+";
  bool any = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] != '+' || depth != 0) continue;
    std::string term = trim(s.substr(start, i - start));
    start = i + 1;
    if (term.empty()) throw InvalidInput("empty summand in '" + spec + "'");
    int mult = 1;
    const std::size_t star = term.find('*');
    if (star != std::string::npos) {
      mult = parse_int(trim(term.substr(0, star)), term);
      term = trim(term.substr(star + 1));
    }
    out = out + parse_term(cat, term).times(mult);
    any = true;
  }
  if (!any || depth != 0) throw InvalidInput("cannot parse object '" + spec + "'");
  return out;
}

std::vector<CCObject> parse_object_list(const Category& cat, const std::string& spec) {
  std::vector<CCObject> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = spec.find(';', start);
    out.push_back(parse_object(cat, spec.substr(start, semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace clusterhall
