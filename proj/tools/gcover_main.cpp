#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gradedcover/builders.hpp"
#include "gradedcover/io.hpp"
#include "gradedcover/supermatrix.hpp"

using namespace gcover;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  throw DomainError("unknown format '" + s + "' (expected text or json)");
}

AlgebraDocument first_algebra(const Document& doc, const std::string& where) {
  if (doc.algebras.empty()) throw DomainError("no algebra section in " + where);
  return doc.algebras.front();
}

// "gl:M,N" / "glz:d0,d1,..." / "osp:P,2Q" / "abelian:E,O"
GradedLieSuperalgebra build_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("builtin spec must look like kind:args");
  std::string kind = spec.substr(0, colon);
  std::vector<int> args;
  std::string rest = spec.substr(colon + 1);
  std::istringstream ss(rest);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      args.push_back(std::stoi(piece));
    } catch (...) {
      throw DomainError("bad integer '" + piece + "' in builtin spec");
    }
  }
  if (kind == "gl") {
    if (args.size() != 2) throw DomainError("gl:M,N needs two integers");
    return build_gl(args[0], args[1]);
  }
  if (kind == "glz") {
    if (args.empty()) throw DomainError("glz needs at least one dimension");
    return build_gl_zgraded(args);
  }
  if (kind == "osp") {
    if (args.size() != 2) throw DomainError("osp:P,2Q needs two integers");
    return build_osp(args[0], args[1]);
  }
  if (kind == "abelian") {
    if (args.size() != 2) throw DomainError("abelian:E,O needs two integers");
    return build_abelian(args[0], args[1]);
  }
  throw DomainError("unknown builtin kind '" + kind + "'");
}

bool looks_like_builtin_spec(const std::string& s) {
  for (const char* prefix : {"gl:", "glz:", "osp:", "abelian:"})
    if (s.rfind(prefix, 0) == 0) return true;
  return false;
}

// File argument, stdin, or a builtin shorthand like gl:1,1.
GradedLieSuperalgebra input_algebra(const std::string& file, bool check_axioms) {
  if (looks_like_builtin_spec(file)) return build_from_spec(file);
  Document doc = parse_document(read_input(file));
  return load_algebra(first_algebra(doc, "input"), check_axioms);
}

int run_verify(const std::string& file, Format fmt) {
  GradedLieSuperalgebra a = input_algebra(file, /*check_axioms=*/false);
  AxiomReport rep = verify_axioms(a);
  if (fmt == Format::json) {
    std::ostringstream out;
    out << "{\n  \"algebra\": \"" << a.name() << "\",\n  \"pass\": "
        << (rep.pass() ? "true" : "false") << ",\n  \"violations\": {\"skew\": "
        << rep.skew.size() << ", \"jacobi\": " << rep.jacobi.size() << ", \"grading\": "
        << rep.grading.size() << ", \"parity\": " << rep.parity.size() << "}\n}\n";
    std::cout << out.str();
    if (!rep.pass()) std::cerr << rep.summary(a);
  } else {
    std::cout << "algebra " << a.name() << " (dim " << a.dim() << ")\n" << rep.summary(a);
  }
  return rep.pass() ? kExitPass : kExitVerificationFailure;
}

int run_functor(const std::string& file, const std::string& op, int k, int n, Format fmt) {
  auto g = std::make_shared<GradedLieSuperalgebra>(input_algebra(file, true));
  FunctorOutput out;
  if (op == "takiff") {
    out = takiff(g, k);
  } else if (op == "gr") {
    out = k == 0 ? split(g) : split(takiff(g, k));
  } else if (op == "pi") {
    out = parity_change(split(takiff(g, k)));
  } else if (op == "iota") {
    out = diagonal(parity_change(split(takiff(g, k))));
  } else if (op == "F") {
    if (n < 2) throw DomainError("--op F needs --n N with N >= 2");
    out = graded_cover(g, n);
  } else {
    throw DomainError("unknown functor op '" + op + "' (takiff|gr|pi|iota|F)");
  }
  Document result;
  if (out.provenance.empty())
    result.algebras.push_back(store_algebra(*out.algebra));
  else
    result.algebras.push_back(store_functor_output(out));
  std::cout << serialize(result, fmt);
  return kExitPass;
}

int run_cover(const std::string& file, int n, int truncate, const std::string& norm, Format fmt) {
  auto g = std::make_shared<GradedLieSuperalgebra>(input_algebra(file, true));
  bool full_window = truncate > 0;
  int degree = full_window ? truncate : n;
  if (degree < 2) throw DomainError("cover needs --n N (or --infinite-truncate T) with value >= 2");
  if (norm != "unit" && norm != "inverse_factorial")
    throw DomainError("unknown normalization '" + norm + "'");
  FunctorOutput p = graded_cover(g, degree);
  Normalization nz = norm == "unit" ? Normalization::unit : Normalization::inverse_factorial;
  GradedMorphism pi = covering_projection(p, g, nz);
  CoveringCertificate cert = verify_covering(
      pi, p.algebra->support(),
      full_window ? CoveringCertificate::Kind::full : CoveringCertificate::Kind::semicovering,
      full_window);

  Document bundle;
  bundle.algebras.push_back(store_algebra(*g));
  bundle.algebras.push_back(store_functor_output(p));
  bundle.morphisms.push_back(store_morphism(pi));
  bundle.certificates.push_back(store_certificate(cert, pi.name));
  std::cout << serialize(bundle, fmt);
  if (!cert.pass()) std::cerr << cert.str();
  return cert.pass() ? kExitPass : kExitVerificationFailure;
}

int run_lift(const std::string& psi_file, const std::string& cover_file, Format fmt) {
  Document psi_doc = parse_document(read_input(psi_file));
  Document cover_doc = parse_document(read_input(cover_file));
  if (psi_doc.morphisms.empty()) throw DomainError("no morphism section in --psi file");
  if (cover_doc.certificates.empty()) throw DomainError("no certificate section in --cover file");

  std::map<std::string, AlgebraPtr> algebras;
  for (const Document* d : {&cover_doc, &psi_doc})
    for (const auto& adoc : d->algebras)
      if (!algebras.count(adoc.name))
        algebras[adoc.name] = std::make_shared<GradedLieSuperalgebra>(load_algebra(adoc));
  AlgebraResolver resolve = [&](const std::string& nm) -> AlgebraPtr {
    auto it = algebras.find(nm);
    return it == algebras.end() ? nullptr : it->second;
  };

  const CertificateDocument& cdoc = cover_doc.certificates.front();
  const MorphismDocument* pdoc = cover_doc.find_morphism(cdoc.morphism);
  if (!pdoc) throw DomainError("certificate references unknown morphism '" + cdoc.morphism + "'");
  GradedMorphism proj = load_morphism(*pdoc, resolve);
  CoveringCertificate cert = load_certificate(cdoc, proj);
  if (!cert.pass()) {
    std::cerr << cert.str();
    return kExitVerificationFailure;
  }
  GradedMorphism psi = load_morphism(psi_doc.morphisms.front(), resolve);
  GradedMorphism lifted = lift_universal(psi, cert);

  Document result;
  result.algebras.push_back(store_algebra(*lifted.source));
  result.algebras.push_back(store_algebra(*lifted.target));
  result.morphisms.push_back(store_morphism(lifted));
  std::cout << serialize(result, fmt);
  return kExitPass;
}

int run_builtin(const std::string& spec, Format fmt) {
  Document doc;
  doc.algebras.push_back(store_algebra(build_from_spec(spec)));
  std::cout << serialize(doc, fmt);
  return kExitPass;
}

int run_matrix(const std::string& spec, int d, Format fmt) {
  if (spec.rfind("gl:", 0) != 0) throw DomainError("matrix expects a gl:M,N spec");
  auto colon = spec.find(':');
  auto comma = spec.find(',', colon);
  if (comma == std::string::npos) throw DomainError("matrix expects a gl:M,N spec");
  int m = std::stoi(spec.substr(colon + 1, comma - colon - 1));
  int n = std::stoi(spec.substr(comma + 1));
  MatrixRealization R = matrix_realization(m, n, d);

  if (fmt == Format::json) {
    std::ostringstream out;
    out << "{\n  \"cover\": \"" << R.cover.algebra->name() << "\",\n  \"generators\": [\n";
    for (std::size_t i = 0; i < R.generators.size(); ++i) {
      const auto& gen = R.generators[i];
      out << "    {\"degree\": " << gen.degree << ", \"base\": \"" << R.labels[i].second
          << "\", \"rows\": [";
      for (int r = 0; r < gen.entries.rows(); ++r) {
        out << (r ? ", [" : "[");
        for (int c = 0; c < gen.entries.cols(); ++c)
          out << (c ? ", \"" : "\"") << format_rational(gen.entries.at(r, c)) << "\"";
        out << "]";
      }
      out << "]}" << (i + 1 < R.generators.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"homomorphism\": " << (R.hom.pass ? "true" : "false")
        << ",\n  \"injective\": " << (R.injective ? "true" : "false") << ",\n  \"verdict\": \""
        << (R.pass() ? "pass" : "fail") << "\"\n}\n";
    std::cout << out.str();
  } else {
    std::cout << "staircase realization of " << R.cover.algebra->name() << " in "
              << R.ambient->name() << "\n";
    for (std::size_t i = 0; i < R.generators.size(); ++i) {
      const auto& gen = R.generators[i];
      std::cout << "generator degree " << gen.degree << " base " << R.labels[i].second << "\n";
      for (int r = 0; r < gen.entries.rows(); ++r) {
        std::cout << " ";
        for (int c = 0; c < gen.entries.cols(); ++c)
          std::cout << " " << format_rational(gen.entries.at(r, c));
        std::cout << "\n";
      }
    }
    std::cout << "homomorphism " << (R.hom.pass ? "pass" : "fail") << "\n";
    std::cout << "injective " << (R.injective ? "pass" : "fail") << "\n";
    std::cout << "verdict " << (R.pass() ? "pass" : "fail") << "\n";
  }
  return R.pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradedcover: exact computations with graded Lie superalgebras,\n"
               "functorial covers, covering projections and matrix realizations"};
  app.require_subcommand(1);

  std::string format = "text";
  auto with_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text or json")->capture_default_str();
    return sub;
  };

  std::string file = "-";
  std::string op, spec, psi_file, cover_file, normalization = "inverse_factorial";
  int k = 1, n = 0, truncate = 0, degree = 2;

  auto* verify = with_format(app.add_subcommand("verify", "run the axiom suite on an algebra document"));
  verify->add_option("file", file, "algebra document (default stdin)");

  auto* functor = with_format(app.add_subcommand("functor", "apply a functor and emit the result"));
  functor->add_option("file", file, "algebra document (default stdin)");
  functor->add_option("--op", op, "takiff|gr|pi|iota|F")->required();
  functor->add_option("--k", k, "number of differentials (takiff/gr/pi/iota)");
  functor->add_option("--n", n, "cover degree (op F)");

  auto* cover = with_format(app.add_subcommand("cover", "build the graded cover, the projection and its certificate"));
  cover->add_option("file", file, "algebra document (default stdin)");
  cover->add_option("--n", n, "semicovering degree");
  cover->add_option("--infinite-truncate", truncate, "verify the full covering through a degree window");
  cover->add_option("--normalization", normalization, "inverse_factorial|unit")->capture_default_str();

  auto* lift = with_format(app.add_subcommand("lift", "lift a graded homomorphism through a covering"));
  lift->add_option("--psi", psi_file, "morphism bundle to lift")->required();
  lift->add_option("--cover", cover_file, "covering bundle emitted by 'cover'")->required();

  auto* builtin = with_format(app.add_subcommand("builtin", "emit a built-in algebra document"));
  builtin->add_option("spec", spec, "gl:M,N | glz:d0,d1,... | osp:P,2Q | abelian:E,O")->required();

  auto* matrix = with_format(app.add_subcommand("matrix", "staircase matrix realization of a cover"));
  matrix->add_option("spec", spec, "gl:M,N")->required();
  matrix->add_option("--n", degree, "cover degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    Format fmt = parse_format(format);
    if (verify->parsed()) return run_verify(file, fmt);
    if (functor->parsed()) return run_functor(file, op, k, n, fmt);
    if (cover->parsed()) return run_cover(file, n, truncate, normalization, fmt);
    if (lift->parsed()) return run_lift(psi_file, cover_file, fmt);
    if (builtin->parsed()) return run_builtin(spec, fmt);
    if (matrix->parsed()) return run_matrix(spec, degree, fmt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.report ? kExitVerificationFailure : kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
