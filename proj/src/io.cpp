#include "gradedcover/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gcover {

using nlohmann::json;

bool AlgebraDocument::operator==(const AlgebraDocument& o) const {
  auto basis_eq = [](const BasisLine& a, const BasisLine& b) {
    return a.name == b.name && a.weight == b.weight && a.parity == b.parity;
  };
  auto bracket_eq = [](const BracketLine& a, const BracketLine& b) {
    return a.left == b.left && a.right == b.right && a.terms == b.terms;
  };
  return name == o.name && generators == o.generators &&
         std::equal(basis.begin(), basis.end(), o.basis.begin(), o.basis.end(), basis_eq) &&
         std::equal(brackets.begin(), brackets.end(), o.brackets.begin(), o.brackets.end(),
                    bracket_eq);
}

bool MorphismDocument::operator==(const MorphismDocument& o) const {
  auto block_eq = [](const Block& a, const Block& b) {
    return a.weight == b.weight && a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  };
  return name == o.name && source == o.source && target == o.target && map_kind == o.map_kind &&
         map_matrix == o.map_matrix && map_coeffs == o.map_coeffs &&
         std::equal(blocks.begin(), blocks.end(), o.blocks.begin(), o.blocks.end(), block_eq);
}

bool CertificateDocument::operator==(const CertificateDocument& o) const {
  auto check_eq = [](const Check& a, const Check& b) {
    return a.name == b.name && a.pass == b.pass && a.detail == b.detail;
  };
  return morphism == o.morphism && kind == o.kind && truncated == o.truncated &&
         support == o.support && verdict == o.verdict &&
         std::equal(checks.begin(), checks.end(), o.checks.begin(), o.checks.end(), check_eq);
}

bool Document::operator==(const Document& o) const {
  return algebras == o.algebras && morphisms == o.morphisms && certificates == o.certificates;
}

const AlgebraDocument* Document::find_algebra(const std::string& n) const {
  for (const auto& a : algebras)
    if (a.name == n) return &a;
  return nullptr;
}

const MorphismDocument* Document::find_morphism(const std::string& n) const {
  for (const auto& m : morphisms)
    if (m.name == n) return &m;
  return nullptr;
}

const CertificateDocument* Document::find_certificate(const std::string& m) const {
  for (const auto& c : certificates)
    if (c.morphism == m) return &c;
  return nullptr;
}

// ---------------------------------------------------------------- text parse

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::vector<int> cols;  // 1-based start column per token
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#')
        ++i;
      line.tokens.push_back(raw.substr(start, i - start));
      line.cols.push_back(static_cast<int>(start) + 1);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t tok, const std::string& expected) {
  int col = tok < line.cols.size() ? line.cols[tok] : (line.cols.empty() ? 1 : line.cols.back() + 1);
  throw ParseError("line " + std::to_string(line.number) + ", column " + std::to_string(col) +
                       ": expected " + expected,
                   line.number, col);
}

const std::string& want(const Line& line, std::size_t tok, const std::string& expected) {
  if (tok >= line.tokens.size()) fail(line, tok, expected);
  return line.tokens[tok];
}

int want_int(const Line& line, std::size_t tok, const std::string& expected) {
  const std::string& s = want(line, tok, expected);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) fail(line, tok, expected);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    fail(line, tok, expected);
  }
}

Parity want_parity(const Line& line, std::size_t tok) {
  const std::string& s = want(line, tok, "'even' or 'odd'");
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  fail(line, tok, "'even' or 'odd'");
}

Rational want_rational(const Line& line, std::size_t tok) {
  Rational r;
  if (!try_parse_rational(want(line, tok, "a rational p/q"), r))
    fail(line, tok, "a rational p/q");
  return r;
}

bool want_bool(const Line& line, std::size_t tok) {
  const std::string& s = want(line, tok, "'true' or 'false'");
  if (s == "true") return true;
  if (s == "false") return false;
  fail(line, tok, "'true' or 'false'");
}

std::string rest_of_line(const Line& line, std::size_t tok) {
  std::string s;
  for (std::size_t i = tok; i < line.tokens.size(); ++i) {
    if (!s.empty()) s += " ";
    s += line.tokens[i];
  }
  return s;
}

}  // namespace

Document parse_text(const std::string& text) {
  Document doc;
  auto lines = tokenize(text);

  enum class Section { none, algebra, morphism, certificate };
  Section section = Section::none;
  // pending matrix rows to read (for gradingmap linear / block payloads)
  int pending_map_rows = 0, pending_map_cols = 0;
  int pending_block_rows = 0, pending_block_cols = 0;

  for (const auto& line : lines) {
    const std::string& head = line.tokens[0];

    if (pending_map_rows > 0 && section == Section::morphism) {
      auto& m = doc.morphisms.back();
      if (static_cast<int>(line.tokens.size()) != pending_map_cols)
        fail(line, line.tokens.size(), std::to_string(pending_map_cols) + " integers");
      std::vector<int> row;
      for (std::size_t t = 0; t < line.tokens.size(); ++t)
        row.push_back(want_int(line, t, "an integer"));
      m.map_matrix.push_back(std::move(row));
      --pending_map_rows;
      continue;
    }
    if (pending_block_rows > 0 && section == Section::morphism) {
      auto& b = doc.morphisms.back().blocks.back();
      if (static_cast<int>(line.tokens.size()) != pending_block_cols)
        fail(line, line.tokens.size(), std::to_string(pending_block_cols) + " rationals");
      for (std::size_t t = 0; t < line.tokens.size(); ++t)
        b.entries.push_back(want_rational(line, t));
      --pending_block_rows;
      continue;
    }

    if (head == "algebra") {
      doc.algebras.push_back({});
      doc.algebras.back().name = want(line, 1, "algebra name");
      section = Section::algebra;
      continue;
    }
    if (head == "morphism") {
      doc.morphisms.push_back({});
      doc.morphisms.back().name = want(line, 1, "morphism name");
      section = Section::morphism;
      continue;
    }
    if (head == "certificate") {
      doc.certificates.push_back({});
      doc.certificates.back().morphism = want(line, 1, "morphism name");
      section = Section::certificate;
      continue;
    }

    if (section == Section::algebra) {
      auto& a = doc.algebras.back();
      if (head == "generator") {
        std::string gname = want(line, 1, "generator name");
        a.generators.emplace_back(gname, want_parity(line, 2));
        continue;
      }
      if (head == "basis") {
        AlgebraDocument::BasisLine b;
        b.name = want(line, 1, "basis name");
        std::size_t t = 2;
        if (t < line.tokens.size() && line.tokens[t] == "weight") {
          ++t;
          for (std::size_t g = 0; g < a.generators.size(); ++g)
            b.weight.push_back(want_int(line, t++, "a weight component"));
        } else if (!a.generators.empty()) {
          fail(line, t, "'weight' (this algebra declares weight generators)");
        }
        if (t < line.tokens.size()) {
          if (line.tokens[t] != "parity") fail(line, t, "'parity'");
          b.parity = want_parity(line, t + 1);
          t += 2;
        }
        if (t != line.tokens.size()) fail(line, t, "end of line");
        a.basis.push_back(std::move(b));
        continue;
      }
      if (head == "bracket") {
        AlgebraDocument::BracketLine b;
        b.left = want(line, 1, "basis name");
        b.right = want(line, 2, "basis name");
        if (want(line, 3, "'='") != "=") fail(line, 3, "'='");
        std::size_t t = 4;
        if (t < line.tokens.size() && line.tokens[t] == "0" && t + 1 == line.tokens.size()) {
          a.brackets.push_back(std::move(b));
          continue;
        }
        while (t < line.tokens.size()) {
          Rational c = want_rational(line, t);
          std::string nm = want(line, t + 1, "basis name");
          b.terms.emplace_back(std::move(c), std::move(nm));
          t += 2;
          if (t < line.tokens.size()) {
            if (line.tokens[t] != "+") fail(line, t, "'+'");
            ++t;
          }
        }
        if (b.terms.empty()) fail(line, 4, "a term or 0");
        a.brackets.push_back(std::move(b));
        continue;
      }
      fail(line, 0, "'generator', 'basis', 'bracket' or a new section");
    }

    if (section == Section::morphism) {
      auto& m = doc.morphisms.back();
      if (head == "source") {
        m.source = want(line, 1, "algebra name");
        continue;
      }
      if (head == "target") {
        m.target = want(line, 1, "algebra name");
        continue;
      }
      if (head == "gradingmap") {
        const std::string& kind = want(line, 1, "'parity' or 'linear'");
        if (kind == "parity") {
          m.map_kind = MorphismDocument::MapKind::parity;
          for (std::size_t t = 2; t < line.tokens.size(); ++t)
            m.map_coeffs.push_back(want_int(line, t, "an integer"));
        } else if (kind == "linear") {
          m.map_kind = MorphismDocument::MapKind::linear;
          pending_map_rows = want_int(line, 2, "row count");
          pending_map_cols = want_int(line, 3, "column count");
          if (pending_map_rows < 0 || pending_map_cols < 0) fail(line, 2, "nonnegative counts");
          if (pending_map_rows > 0 && pending_map_cols == 0)
            m.map_matrix.assign(pending_map_rows, {}), pending_map_rows = 0;
        } else {
          fail(line, 1, "'parity' or 'linear'");
        }
        continue;
      }
      if (head == "block") {
        MorphismDocument::Block b;
        // weight components precede the row/column counts; their number is
        // fixed by the source algebra, so read all-but-two as weight
        if (line.tokens.size() < 3) fail(line, 1, "weight components, rows, cols");
        for (std::size_t t = 1; t + 2 < line.tokens.size(); ++t)
          b.weight.push_back(want_int(line, t, "a weight component"));
        b.rows = want_int(line, line.tokens.size() - 2, "row count");
        b.cols = want_int(line, line.tokens.size() - 1, "column count");
        if (b.rows < 0 || b.cols < 0) fail(line, 1, "nonnegative counts");
        pending_block_rows = b.cols == 0 ? 0 : b.rows;
        pending_block_cols = b.cols;
        m.blocks.push_back(std::move(b));
        continue;
      }
      fail(line, 0, "'source', 'target', 'gradingmap', 'block' or a new section");
    }

    if (section == Section::certificate) {
      auto& c = doc.certificates.back();
      if (head == "kind") {
        c.kind = want(line, 1, "'full' or 'semicovering'");
        if (c.kind != "full" && c.kind != "semicovering") fail(line, 1, "'full' or 'semicovering'");
        continue;
      }
      if (head == "truncated") {
        c.truncated = want_bool(line, 1);
        continue;
      }
      if (head == "supportweight") {
        std::vector<int> w;
        for (std::size_t t = 1; t < line.tokens.size(); ++t)
          w.push_back(want_int(line, t, "an integer"));
        c.support.push_back(std::move(w));
        continue;
      }
      if (head == "verdict") {
        const std::string& v = want(line, 1, "'pass' or 'fail'");
        if (v != "pass" && v != "fail") fail(line, 1, "'pass' or 'fail'");
        c.verdict = v == "pass";
        continue;
      }
      if (head == "check") {
        CertificateDocument::Check ch;
        ch.name = want(line, 1, "check name");
        const std::string& v = want(line, 2, "'pass' or 'fail'");
        if (v != "pass" && v != "fail") fail(line, 2, "'pass' or 'fail'");
        ch.pass = v == "pass";
        ch.detail = rest_of_line(line, 3);
        c.checks.push_back(std::move(ch));
        continue;
      }
      fail(line, 0, "a certificate field or a new section");
    }

    fail(line, 0, "'algebra', 'morphism' or 'certificate'");
  }
  if (pending_map_rows > 0 || pending_block_rows > 0)
    throw ParseError("unexpected end of input inside a matrix payload", 0, 0);
  return doc;
}

// ------------------------------------------------------------ text serialize

namespace {

std::string weight_tokens(const std::vector<int>& w) {
  std::string s;
  for (int c : w) s += " " + std::to_string(c);
  return s;
}

}  // namespace

std::string to_text(const Document& doc) {
  std::string s;
  bool first = true;
  for (const auto& a : doc.algebras) {
    if (!first) s += "\n";
    first = false;
    for (const auto& c : a.comments) s += "# " + c + "\n";
    s += "algebra " + a.name + "\n";
    for (const auto& [g, p] : a.generators)
      s += "generator " + g + " " + parity_name(p) + "\n";
    for (const auto& b : a.basis) {
      s += "basis " + b.name;
      if (!a.generators.empty()) s += " weight" + weight_tokens(b.weight);
      if (b.parity) s += " parity " + std::string(parity_name(*b.parity));
      s += "\n";
    }
    for (const auto& br : a.brackets) {
      s += "bracket " + br.left + " " + br.right + " =";
      if (br.terms.empty()) {
        s += " 0";
      } else {
        bool f2 = true;
        for (const auto& [c, nm] : br.terms) {
          s += (f2 ? " " : " + ") + format_rational(c) + " " + nm;
          f2 = false;
        }
      }
      s += "\n";
    }
  }
  for (const auto& m : doc.morphisms) {
    if (!first) s += "\n";
    first = false;
    s += "morphism " + m.name + "\n";
    s += "source " + m.source + "\n";
    s += "target " + m.target + "\n";
    if (m.map_kind == MorphismDocument::MapKind::parity) {
      s += "gradingmap parity";
      for (int c : m.map_coeffs) s += " " + std::to_string(c);
      s += "\n";
    } else {
      s += "gradingmap linear " + std::to_string(m.map_matrix.size()) + " " +
           std::to_string(m.map_matrix.empty() ? 0 : m.map_matrix[0].size()) + "\n";
      for (const auto& row : m.map_matrix) {
        std::string rs;
        for (int c : row) rs += (rs.empty() ? "" : " ") + std::to_string(c);
        s += rs + "\n";
      }
    }
    for (const auto& b : m.blocks) {
      s += "block" + weight_tokens(b.weight) + " " + std::to_string(b.rows) + " " +
           std::to_string(b.cols) + "\n";
      for (int r = 0; r < b.rows && b.cols > 0; ++r) {
        std::string rs;
        for (int c = 0; c < b.cols; ++c)
          rs += (rs.empty() ? "" : " ") + format_rational(b.entries[r * b.cols + c]);
        s += rs + "\n";
      }
    }
  }
  for (const auto& c : doc.certificates) {
    if (!first) s += "\n";
    first = false;
    s += "certificate " + c.morphism + "\n";
    s += "kind " + c.kind + "\n";
    s += std::string("truncated ") + (c.truncated ? "true" : "false") + "\n";
    for (const auto& w : c.support) s += "supportweight" + weight_tokens(w) + "\n";
    for (const auto& ch : c.checks) {
      s += "check " + ch.name + " " + (ch.pass ? "pass" : "fail");
      if (!ch.detail.empty()) s += " " + ch.detail;
      s += "\n";
    }
    s += std::string("verdict ") + (c.verdict ? "pass" : "fail") + "\n";
  }
  return s;
}

// ------------------------------------------------------------------- JSON

namespace {

json algebra_to_json(const AlgebraDocument& a) {
  json j;
  j["name"] = a.name;
  j["generators"] = json::array();
  for (const auto& [g, p] : a.generators) j["generators"].push_back({{"name", g}, {"parity", parity_name(p)}});
  j["basis"] = json::array();
  for (const auto& b : a.basis) {
    json jb{{"name", b.name}, {"weight", b.weight}};
    if (b.parity) jb["parity"] = parity_name(*b.parity);
    j["basis"].push_back(jb);
  }
  j["brackets"] = json::array();
  for (const auto& br : a.brackets) {
    json terms = json::array();
    for (const auto& [c, nm] : br.terms) terms.push_back({{"coeff", format_rational(c)}, {"basis", nm}});
    j["brackets"].push_back({{"left", br.left}, {"right", br.right}, {"terms", terms}});
  }
  return j;
}

AlgebraDocument algebra_from_json(const json& j) {
  AlgebraDocument a;
  a.name = j.at("name").get<std::string>();
  for (const auto& g : j.value("generators", json::array()))
    a.generators.emplace_back(g.at("name").get<std::string>(),
                              g.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even);
  for (const auto& b : j.value("basis", json::array())) {
    AlgebraDocument::BasisLine bl;
    bl.name = b.at("name").get<std::string>();
    bl.weight = b.value("weight", std::vector<int>{});
    if (b.contains("parity"))
      bl.parity = b.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even;
    a.basis.push_back(std::move(bl));
  }
  for (const auto& br : j.value("brackets", json::array())) {
    AlgebraDocument::BracketLine bl;
    bl.left = br.at("left").get<std::string>();
    bl.right = br.at("right").get<std::string>();
    for (const auto& t : br.value("terms", json::array()))
      bl.terms.emplace_back(parse_rational(t.at("coeff").get<std::string>()),
                            t.at("basis").get<std::string>());
    a.brackets.push_back(std::move(bl));
  }
  return a;
}

json morphism_to_json(const MorphismDocument& m) {
  json j;
  j["name"] = m.name;
  j["source"] = m.source;
  j["target"] = m.target;
  if (m.map_kind == MorphismDocument::MapKind::parity)
    j["gradingmap"] = {{"kind", "parity"}, {"coeffs", m.map_coeffs}};
  else
    j["gradingmap"] = {{"kind", "linear"}, {"matrix", m.map_matrix}};
  j["blocks"] = json::array();
  for (const auto& b : m.blocks) {
    json entries = json::array();
    for (const auto& e : b.entries) entries.push_back(format_rational(e));
    j["blocks"].push_back(
        {{"weight", b.weight}, {"rows", b.rows}, {"cols", b.cols}, {"entries", entries}});
  }
  return j;
}

MorphismDocument morphism_from_json(const json& j) {
  MorphismDocument m;
  m.name = j.at("name").get<std::string>();
  m.source = j.at("source").get<std::string>();
  m.target = j.at("target").get<std::string>();
  const auto& gm = j.at("gradingmap");
  if (gm.at("kind").get<std::string>() == "parity") {
    m.map_kind = MorphismDocument::MapKind::parity;
    m.map_coeffs = gm.value("coeffs", std::vector<int>{});
  } else {
    m.map_kind = MorphismDocument::MapKind::linear;
    m.map_matrix = gm.value("matrix", std::vector<std::vector<int>>{});
  }
  for (const auto& b : j.value("blocks", json::array())) {
    MorphismDocument::Block bl;
    bl.weight = b.value("weight", std::vector<int>{});
    bl.rows = b.at("rows").get<int>();
    bl.cols = b.at("cols").get<int>();
    for (const auto& e : b.at("entries")) bl.entries.push_back(parse_rational(e.get<std::string>()));
    m.blocks.push_back(std::move(bl));
  }
  return m;
}

json certificate_to_json(const CertificateDocument& c) {
  json j;
  j["morphism"] = c.morphism;
  j["kind"] = c.kind;
  j["truncated"] = c.truncated;
  j["support"] = c.support;
  j["verdict"] = c.verdict ? "pass" : "fail";
  j["checks"] = json::array();
  for (const auto& ch : c.checks)
    j["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  return j;
}

CertificateDocument certificate_from_json(const json& j) {
  CertificateDocument c;
  c.morphism = j.at("morphism").get<std::string>();
  c.kind = j.at("kind").get<std::string>();
  c.truncated = j.value("truncated", false);
  c.support = j.value("support", std::vector<std::vector<int>>{});
  c.verdict = j.at("verdict").get<std::string>() == "pass";
  for (const auto& ch : j.value("checks", json::array())) {
    CertificateDocument::Check k;
    k.name = ch.at("name").get<std::string>();
    k.pass = ch.at("pass").get<bool>();
    k.detail = ch.value("detail", "");
    c.checks.push_back(std::move(k));
  }
  return c;
}

}  // namespace

std::string to_json_string(const Document& doc) {
  json j;
  j["format"] = "gradedcover/1";
  j["algebras"] = json::array();
  for (const auto& a : doc.algebras) j["algebras"].push_back(algebra_to_json(a));
  j["morphisms"] = json::array();
  for (const auto& m : doc.morphisms) j["morphisms"].push_back(morphism_to_json(m));
  j["certificates"] = json::array();
  for (const auto& c : doc.certificates) j["certificates"].push_back(certificate_to_json(c));
  return j.dump(2) + "\n";
}

Document parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), 0, 0);
  }
  try {
    Document doc;
    for (const auto& a : j.value("algebras", json::array())) doc.algebras.push_back(algebra_from_json(a));
    for (const auto& m : j.value("morphisms", json::array()))
      doc.morphisms.push_back(morphism_from_json(m));
    for (const auto& c : j.value("certificates", json::array()))
      doc.certificates.push_back(certificate_from_json(c));
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what(), 0, 0);
  }
}

Document parse_document(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_json(text);
    break;
  }
  return parse_text(text);
}

std::string serialize(const Document& doc, Format f) {
  return f == Format::text ? to_text(doc) : to_json_string(doc);
}

// ------------------------------------------------------------------- loaders

GradedLieSuperalgebra load_algebra(const AlgebraDocument& doc, bool check_axioms) {
  if (doc.name.empty()) throw LoadError("algebra without a name");
  std::vector<std::string> gens;
  for (const auto& [g, p] : doc.generators) {
    (void)p;
    if (std::find(gens.begin(), gens.end(), g) != gens.end())
      throw LoadError("duplicate weight generator '" + g + "'");
    gens.push_back(g);
  }

  GradedLieSuperalgebra::Builder bld(doc.name);
  if (!gens.empty()) {
    WeightSystem sys;
    sys.gens = gens;
    for (const auto& [g, p] : doc.generators) sys.chi[g] = p;
    // admissible weights: the declared support plus 0 and the generators
    sys.delta.push_back(Weight::zero(gens));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<int> c(gens.size(), 0);
      c[i] = 1;
      sys.delta.push_back(Weight(gens, c));
    }
    for (const auto& b : doc.basis) {
      if (b.weight.size() != gens.size())
        throw LoadError("basis '" + b.name + "' has " + std::to_string(b.weight.size()) +
                        " weight components for " + std::to_string(gens.size()) + " generators");
      Weight w(gens, b.weight);
      if (std::find(sys.delta.begin(), sys.delta.end(), w) == sys.delta.end())
        sys.delta.push_back(w);
    }
    std::sort(sys.delta.begin(), sys.delta.end());
    bld.attach_system(sys);
  }

  Rational probe;
  for (const auto& b : doc.basis) {
    if (b.name.empty() || b.name == "+" || b.name == "=" || try_parse_rational(b.name, probe))
      throw LoadError("basis name '" + b.name + "' is not a valid identifier");
    if (gens.empty() && !b.parity)
      throw LoadError("basis '" + b.name + "': parity required (no weight generators declared)");
    try {
      bld.add_basis(b.name, gens.empty() ? Weight::zero({}) : Weight(gens, b.weight), b.parity);
    } catch (const DomainError& e) {
      throw LoadError(e.what());
    }
  }
  GradedLieSuperalgebra probe_algebra = [&] {
    try {
      return bld.build();  // resolves names, checks duplicates
    } catch (const DomainError& e) {
      throw LoadError(e.what());
    }
  }();

  auto index_of = [&](const std::string& nm, const char* what) {
    int i = probe_algebra.index_of(nm);
    if (i < 0) throw LoadError(std::string(what) + " references undeclared basis '" + nm + "'");
    return i;
  };

  // collect canonical rows; explicitly given skew partners must agree
  std::map<std::pair<int, int>, std::pair<SparseRow, std::string>> rows;
  for (const auto& br : doc.brackets) {
    int i = index_of(br.left, "bracket");
    int j = index_of(br.right, "bracket");
    SparseRow row;
    for (const auto& [c, nm] : br.terms) row.emplace_back(index_of(nm, "bracket term"), c);
    row = normalized(std::move(row));
    bool flip = i > j;
    if (flip) {
      Rational sign = (probe_algebra.basis(i).parity == Parity::odd &&
                       probe_algebra.basis(j).parity == Parity::odd)
                          ? 1
                          : -1;
      for (auto& [idx, c] : row) c *= sign;
      std::swap(i, j);
    }
    auto key = std::make_pair(i, j);
    std::string label = "[" + br.left + ", " + br.right + "]";
    auto it = rows.find(key);
    if (it != rows.end()) {
      if (it->second.first != row)
        throw LoadError("brackets " + it->second.second + " and " + label +
                        " are inconsistent with the skew-symmetry rule");
    } else {
      rows.emplace(key, std::make_pair(std::move(row), std::move(label)));
    }
  }

  auto bld2 = GradedLieSuperalgebra::Builder::from(probe_algebra);
  for (auto& [key, val] : rows) bld2.set_bracket(key.first, key.second, val.first);
  GradedLieSuperalgebra a = bld2.build();

  if (check_axioms) {
    AxiomReport rep = verify_axioms(a);
    if (!rep.pass())
      throw LoadError("algebra '" + doc.name + "' violates the Lie superalgebra axioms:\n" +
                          rep.summary(a),
                      rep);
  }
  return a;
}

AlgebraDocument store_algebra(const GradedLieSuperalgebra& a) {
  AlgebraDocument doc;
  doc.name = a.name();
  if (a.system())
    for (const auto& g : a.system()->gens) doc.generators.emplace_back(g, a.system()->chi.at(g));
  bool explicit_parity = !a.system();
  for (const auto& b : a.basis()) {
    AlgebraDocument::BasisLine bl;
    bl.name = b.name;
    bl.weight = b.weight.comps;
    if (explicit_parity) bl.parity = b.parity;
    doc.basis.push_back(std::move(bl));
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      SparseRow row = a.bracket_row(i, j);
      if (row.empty()) continue;
      AlgebraDocument::BracketLine bl;
      bl.left = a.basis(i).name;
      bl.right = a.basis(j).name;
      for (const auto& [k, c] : row) bl.terms.emplace_back(c, a.basis(k).name);
      doc.brackets.push_back(std::move(bl));
    }
  return doc;
}

AlgebraDocument store_functor_output(const FunctorOutput& out) {
  const auto& a = *out.algebra;
  // canonical order: (weight, provenance multi-index, base name)
  std::vector<int> order(a.dim());
  for (int i = 0; i < a.dim(); ++i) order[i] = i;
  auto key = [&](int i) {
    const auto& p = out.provenance[i];
    std::vector<int> mi = p.degree >= 0 ? std::vector<int>{p.degree} : p.index_set;
    return std::make_tuple(a.basis(i).weight.comps, mi, out.base->basis(p.base).name);
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });

  std::vector<int> position(a.dim());
  for (int r = 0; r < a.dim(); ++r) position[order[r]] = r;

  AlgebraDocument doc;
  doc.name = a.name();
  if (a.system())
    for (const auto& g : a.system()->gens) doc.generators.emplace_back(g, a.system()->chi.at(g));
  bool explicit_parity = !a.system();
  for (int r = 0; r < a.dim(); ++r) {
    const auto& b = a.basis(order[r]);
    AlgebraDocument::BasisLine bl;
    bl.name = b.name;
    bl.weight = b.weight.comps;
    if (explicit_parity) bl.parity = b.parity;
    doc.basis.push_back(std::move(bl));
    const auto& p = out.provenance[order[r]];
    if (p.degree >= 0) {
      doc.comments.push_back(b.name + " = diagonal generator of degree " +
                             std::to_string(p.degree) + " over " + out.base->basis(p.base).name);
    } else {
      std::string mi;
      for (int ix : p.index_set) mi += (mi.empty() ? "" : ",") + std::to_string(ix);
      doc.comments.push_back(b.name + " = d{" + mi + "} applied to " +
                             out.base->basis(p.base).name);
    }
  }
  // brackets in document order, canonical half by document positions
  for (int r = 0; r < a.dim(); ++r)
    for (int s = r; s < a.dim(); ++s) {
      SparseRow row = a.bracket_row(order[r], order[s]);
      if (row.empty()) continue;
      AlgebraDocument::BracketLine bl;
      bl.left = a.basis(order[r]).name;
      bl.right = a.basis(order[s]).name;
      std::vector<std::pair<int, Rational>> terms;
      for (const auto& [k, c] : row) terms.emplace_back(position[k], c);
      std::sort(terms.begin(), terms.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [pos, c] : terms) bl.terms.emplace_back(c, a.basis(order[pos]).name);
      doc.brackets.push_back(std::move(bl));
    }
  return doc;
}

GradedMorphism load_morphism(const MorphismDocument& doc, const AlgebraResolver& resolve) {
  GradedMorphism f;
  f.name = doc.name;
  f.source = resolve(doc.source);
  f.target = resolve(doc.target);
  if (!f.source) throw LoadError("morphism '" + doc.name + "': unknown source '" + doc.source + "'");
  if (!f.target) throw LoadError("morphism '" + doc.name + "': unknown target '" + doc.target + "'");

  const auto& gens = f.source->weight_generators();
  if (doc.map_kind == MorphismDocument::MapKind::parity) {
    if (doc.map_coeffs.size() != gens.size())
      throw LoadError("morphism '" + doc.name + "': parity map needs " +
                      std::to_string(gens.size()) + " coefficients");
    GradingMap m;
    m.kind = GradingMap::Kind::parity;
    m.source_gens = gens;
    m.parity_coeffs = doc.map_coeffs;
    f.phi = m;
  } else {
    try {
      f.phi = GradingMap::linear(gens, f.target->weight_generators(), doc.map_matrix);
    } catch (const DomainError& e) {
      throw LoadError("morphism '" + doc.name + "': " + e.what());
    }
  }

  f.mat = Matrix(f.target->dim(), f.source->dim());
  for (const auto& b : doc.blocks) {
    if (b.weight.size() != gens.size())
      throw LoadError("morphism '" + doc.name + "': block weight rank mismatch");
    Weight w(gens, b.weight);
    std::vector<int> cols = f.source->homogeneous_component(w);
    std::vector<int> rows = f.target_component(w);
    if (static_cast<int>(cols.size()) != b.cols || static_cast<int>(rows.size()) != b.rows)
      throw LoadError("morphism '" + doc.name + "': block at " + w.str() + " must be " +
                      std::to_string(rows.size()) + "x" + std::to_string(cols.size()));
    if (static_cast<int>(b.entries.size()) != b.rows * b.cols)
      throw LoadError("morphism '" + doc.name + "': block at " + w.str() + " has wrong entry count");
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) f.mat.at(rows[r], cols[c]) = b.entries[r * b.cols + c];
  }
  if (auto msg = validate_graded(f)) throw LoadError("morphism '" + doc.name + "': " + *msg);
  return f;
}

MorphismDocument store_morphism(const GradedMorphism& f) {
  MorphismDocument doc;
  doc.name = f.name;
  doc.source = f.source->name();
  doc.target = f.target->name();
  if (f.phi.kind == GradingMap::Kind::parity) {
    doc.map_kind = MorphismDocument::MapKind::parity;
    doc.map_coeffs = f.phi.parity_coeffs;
  } else {
    doc.map_kind = MorphismDocument::MapKind::linear;
    doc.map_matrix = f.phi.matrix;
  }
  for (const auto& w : f.source->support()) {
    MorphismDocument::Block b;
    b.weight = w.comps;
    std::vector<int> cols = f.source->homogeneous_component(w);
    std::vector<int> rows = f.target_component(w);
    b.rows = static_cast<int>(rows.size());
    b.cols = static_cast<int>(cols.size());
    for (int r : rows)
      for (int c : cols) b.entries.push_back(f.mat.at(r, c));
    doc.blocks.push_back(std::move(b));
  }
  return doc;
}

CoveringCertificate load_certificate(const CertificateDocument& doc, const GradedMorphism& proj) {
  std::vector<Weight> C;
  const auto& gens = proj.source->weight_generators();
  for (const auto& w : doc.support) {
    if (w.size() != gens.size()) throw LoadError("certificate support weight rank mismatch");
    C.push_back(Weight(gens, w));
  }
  auto kind = doc.kind == "full" ? CoveringCertificate::Kind::full
                                 : CoveringCertificate::Kind::semicovering;
  return verify_covering(proj, C, kind, doc.truncated);
}

CertificateDocument store_certificate(const CoveringCertificate& cert,
                                      const std::string& morphism_name) {
  CertificateDocument doc;
  doc.morphism = morphism_name;
  doc.kind = cert.kind == CoveringCertificate::Kind::full ? "full" : "semicovering";
  doc.truncated = cert.truncated;
  for (const auto& w : cert.support) doc.support.push_back(w.comps);
  doc.verdict = cert.pass();
  for (const auto& c : cert.checks) doc.checks.push_back({c.name, c.pass, c.detail});
  return doc;
}

}  // namespace gcover
