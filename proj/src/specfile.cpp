#include "omega4/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "omega4/error.hpp"

namespace omega4 {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct PendingRel {
  int line;
  std::string expr;
};

Path parse_path(const Quiver& q, const std::string& text, int line) {
  std::vector<int> arrows;
  std::string name;
  std::istringstream in(text);
  while (std::getline(in, name, '.')) {
    if (name.empty()) parse_fail(line, "empty arrow name in path '" + text + "'");
    int idx = q.arrow_index(name);
    if (idx < 0) parse_fail(line, "unknown arrow '" + name + "'");
    arrows.push_back(idx);
  }
  if (arrows.empty()) parse_fail(line, "empty path");
  for (size_t k = 1; k < arrows.size(); ++k)
    if (q.arrows[arrows[k - 1]].dst != q.arrows[arrows[k]].src)
      parse_fail(line, "path '" + text + "' is not composable");
  return Path::of_arrows(q, arrows);
}

Relation parse_relation(const Quiver& q, const PrimeField& f,
                        const std::string& expr, int line) {
  // Split into signed terms on top-level + and -.
  std::vector<std::pair<int, std::string>> raw_terms;  // sign, text
  std::string cur;
  int sign = +1;
  bool at_term_start = true;
  for (char c : expr) {
    if (c == ' ' || c == '\t') continue;
    if ((c == '+' || c == '-') && !at_term_start) {
      raw_terms.emplace_back(sign, cur);
      cur.clear();
      sign = (c == '-') ? -1 : +1;
      at_term_start = true;
      continue;
    }
    if ((c == '+' || c == '-') && at_term_start && cur.empty()) {
      sign = (c == '-') ? -sign : sign;
      continue;
    }
    cur += c;
    at_term_start = false;
  }
  if (!cur.empty()) raw_terms.emplace_back(sign, cur);
  if (raw_terms.empty()) parse_fail(line, "empty relation");

  std::vector<std::pair<uint32_t, Path>> terms;
  for (auto& [sgn, text] : raw_terms) {
    int64_t coeff = 1;
    std::string path_text = text;
    auto star = text.find('*');
    if (star != std::string::npos) {
      std::string num = text.substr(0, star);
      try {
        size_t used = 0;
        coeff = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        parse_fail(line, "bad coefficient '" + num + "'");
      }
      path_text = text.substr(star + 1);
    }
    coeff *= sgn;
    uint32_t c = f.reduce(coeff);
    if (c == 0)
      parse_fail(line, "coefficient vanishes mod " + std::to_string(f.p));
    terms.emplace_back(c, parse_path(q, path_text, line));
  }
  try {
    return make_relation(q, f, std::move(terms));
  } catch (const Error& e) {
    parse_fail(line, e.what());
  }
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  bool field_seen = false;
  PrimeField field{2};
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  std::vector<PendingRel> rels;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "field") {
      if (tok.size() != 2) parse_fail(lineno, "usage: field <p>");
      if (field_seen) parse_fail(lineno, "duplicate field directive");
      try {
        field = PrimeField(static_cast<uint32_t>(std::stoul(tok[1])));
      } catch (const Error& e) {
        parse_fail(lineno, e.what());
      } catch (const std::exception&) {
        parse_fail(lineno, "bad field modulus '" + tok[1] + "'");
      }
      field_seen = true;
    } else if (head == "vertex") {
      if (tok.size() != 2) parse_fail(lineno, "usage: vertex <id>");
      int v = 0;
      try {
        v = std::stoi(tok[1]);
      } catch (const std::exception&) {
        parse_fail(lineno, "bad vertex id '" + tok[1] + "'");
      }
      if (v < 1) parse_fail(lineno, "vertex ids start at 1");
      if (std::find(vertices.begin(), vertices.end(), v) != vertices.end())
        parse_fail(lineno, "duplicate vertex " + tok[1]);
      vertices.push_back(v);
    } else if (head == "arrow") {
      if (tok.size() != 4) parse_fail(lineno, "usage: arrow <name> <src> <dst>");
      int s = 0, d = 0;
      try {
        s = std::stoi(tok[2]);
        d = std::stoi(tok[3]);
      } catch (const std::exception&) {
        parse_fail(lineno, "bad arrow endpoints");
      }
      arrows.push_back(Arrow{tok[1], s, d});
    } else if (head == "rel") {
      auto pos = raw.find("rel");
      std::string expr = raw.substr(pos + 3);
      auto h2 = expr.find('#');
      if (h2 != std::string::npos) expr = expr.substr(0, h2);
      rels.push_back(PendingRel{lineno, expr});
    } else {
      parse_fail(lineno, "unknown directive '" + head + "'");
    }
  }

  if (vertices.empty()) throw Error(ErrKind::Parse, "no vertices declared");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw Error(ErrKind::Parse, "vertex ids must be exactly 1..V");

  AlgebraSpec spec;
  spec.field = field;
  spec.quiver.num_vertices = static_cast<int>(vertices.size());
  spec.quiver.arrows = arrows;
  try {
    spec.quiver.validate();
  } catch (const Error& e) {
    throw Error(ErrKind::Parse, e.what());
  }
  for (const PendingRel& pr : rels)
    spec.relations.push_back(
        parse_relation(spec.quiver, spec.field, pr.expr, pr.line));
  return spec;
}

AlgebraSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrKind::Parse, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string emit_spec(const PrimeField& f, const Quiver& q,
                      const std::vector<Relation>& rels) {
  std::ostringstream out;
  out << "field " << f.p << "\n";
  for (int v = 1; v <= q.num_vertices; ++v) out << "vertex " << v << "\n";
  for (const Arrow& a : q.arrows)
    out << "arrow " << a.name << " " << a.src << " " << a.dst << "\n";
  for (const Relation& r : rels) {
    out << "rel ";
    for (size_t t = 0; t < r.terms.size(); ++t) {
      const auto& [c, p] = r.terms[t];
      uint32_t coeff = c;
      bool negate = false;
      // Prefer "- x" over "+ (p-1)*x" so binomials read naturally.
      if (t > 0 && coeff == f.p - 1 && f.p > 2) {
        negate = true;
        coeff = 1;
      }
      if (t > 0) out << (negate ? " - " : " + ");
      if (coeff != 1) out << coeff << "*";
      std::string sep;
      for (int ar : p.arrows) {
        out << sep << q.arrows[ar].name;
        sep = ".";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace omega4
