#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ncconic/cmap.hpp"
#include "ncconic/dataset.hpp"
#include "ncconic/elements.hpp"
#include "ncconic/findim.hpp"
#include "ncconic/geometry.hpp"
#include "ncconic/homog.hpp"
#include "ncconic/parse.hpp"
#include "ncconic/quadratic.hpp"

using namespace ncconic;

namespace {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string matrix_str(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) s += "  " + vec_str(m.row(i)) + "\n";
  return s;
}

void print_algebra(const FiniteAlgebra& a) {
  std::cout << a.str();
  std::cout << "class: " << classify(a).str() << "\n";
}

std::size_t gen_index(const Presentation& p, const std::string& name) {
  const auto& names = p.ambient->names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error(ErrorKind::Parse, "unknown generator '" + name + "'");
}

// Relations of the file as S, elem: lines as F.
Pencil split_pencil(const PresentationFile& f) {
  if (f.elements.empty()) throw Error(ErrorKind::Parse, "expected elem: lines for the sequence F");
  return Pencil{f.presentation, f.elements};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with noncommutative conics"};
  app.require_subcommand(1);

  std::string file;
  int max_deg = default_max_degree();
  int deg = 2;
  std::string elem;
  std::string table;
  std::string row;
  bool verbose = false;
  unsigned threads = 0;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "presentation file")->required();
    sub->add_option("--max-deg", max_deg, "rewrite truncation degree");
    return sub;
  };
  auto* dual = with_file(app.add_subcommand("dual", "print the quadratic dual"));
  auto* hilbert = with_file(app.add_subcommand("hilbert", "print the Hilbert prefix"));
  auto* basis = with_file(app.add_subcommand("basis", "print a monomial basis in one degree"));
  basis->add_option("--deg", deg, "degree");
  auto* center = with_file(app.add_subcommand("center", "print a basis of the center in one degree"));
  center->add_option("--deg", deg, "degree");
  auto* normal1 = with_file(app.add_subcommand("normal1", "find regular normal elements of degree 1"));
  auto* homogenize = with_file(app.add_subcommand("homogenize", "homogenize the elem: sequence over S"));
  auto* dehomogenize = with_file(app.add_subcommand("dehomogenize", "set a generator to 1"));
  dehomogenize->add_option("--elem", elem, "generator to dehomogenize at")->required();
  auto* cmap = with_file(app.add_subcommand("cmap", "structure constants of C(A) for a conic"));
  auto* cls = with_file(app.add_subcommand("classify", "class of C(A), or of a finite algebra"));
  auto* nab = with_file(app.add_subcommand("nabla", "the conic attached to a pencil"));
  auto* del = with_file(app.add_subcommand("delta", "the algebra attached to a dual conic"));
  auto* ps = with_file(app.add_subcommand("pointscheme", "minors, points and sigma"));
  auto* verify = app.add_subcommand("verify", "check the bundled tables");
  verify->add_option("--table", table, "table id (2, 3, 4, A..K or 5..15, id)");
  verify->add_option("--row", row, "row label");
  verify->add_option("--max-deg", max_deg, "rewrite truncation degree");
  verify->add_option("--threads", threads, "worker threads, 0 for hardware concurrency");
  verify->add_flag("-v,--verbose", verbose, "list every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<std::string> ids = table.empty() ? table_ids() : std::vector<std::string>{table};
      bool failed = false;
      for (auto& id : ids) {
        for (auto& r : verify_table(id, row, max_deg, threads)) {
          std::string line = r.str(verbose);
          std::cout << line << (line.ends_with('\n') ? "" : "\n");
          failed |= r.status == RowStatus::Fail;
        }
      }
      return failed ? 1 : 0;
    }

    PresentationFile pf = read_presentation_file(file);
    const Presentation& p = pf.presentation;

    if (dual->parsed()) {
      std::cout << print_presentation(quadratic_dual(p));
    } else if (hilbert->parsed()) {
      GradedAlgebra a(p, max_deg);
      std::string s;
      for (std::size_t i = 0; i < a.hilbert().size(); ++i) s += (i ? "," : "") + std::to_string(a.hilbert()[i]);
      std::cout << s << "\n";
    } else if (basis->parsed()) {
      GradedAlgebra a(p, max_deg);
      for (auto& w : a.basis(deg)) std::cout << (w.empty() ? "1" : word_str(*p.ambient, w)) << "\n";
    } else if (center->parsed()) {
      GradedAlgebra a(p, max_deg);
      auto z = center_degree(a, deg);
      std::cout << "dim " << z.size() << "\n";
      for (auto& c : z) std::cout << c.str() << "\n";
    } else if (normal1->parsed()) {
      GradedAlgebra a(p, max_deg);
      NormalSearch ns = find_normal_degree1(a);
      for (auto& c : ns.regular) {
        std::cout << "elem: " << c.w.str() << (c.central ? " (central)" : "") << "\n";
        std::cout << "nu:\n" << matrix_str(c.nu);
      }
      std::cout << "found " << ns.regular.size() << (ns.complete ? ", search complete" : ", search incomplete");
      if (!ns.note.empty()) std::cout << " (" << ns.note << ")";
      std::cout << "\n";
    } else if (homogenize->parsed()) {
      Pencil e = split_pencil(pf);
      std::cout << print_presentation(homogenize_presentation(e.s, e.f));
    } else if (dehomogenize->parsed()) {
      std::cout << print_presentation(dehomogenize_presentation(p, gen_index(p, elem)));
    } else if (cmap->parsed()) {
      CResult c = compute_C(p, max_deg);
      if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
      print_algebra(c.algebra);
    } else if (cls->parsed()) {
      if (p.is_quadratic() && p.ngens() == 3 && p.relations.size() == 4) {
        std::cout << classify(compute_C(p, max_deg).algebra).str() << "\n";
      } else {
        std::cout << classify(from_presentation(p.ambient, p.relations)).str() << "\n";
      }
    } else if (nab->parsed()) {
      std::cout << print_presentation(nabla(split_pencil(pf), max_deg));
    } else if (del->parsed()) {
      CResult c = delta(p, max_deg);
      if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
      print_algebra(c.algebra);
    } else if (ps->parsed()) {
      PointScheme s = point_scheme(p.relations, p.ambient->field);
      std::cout << "minors:\n";
      for (auto& m : s.gens) std::cout << "  " << m.str(p.ambient->names) << "\n";
      if (!s.finite) {
        std::cout << "positive dimensional\n";
        return 0;
      }
      std::cout << "points: " << s.points.size() << "\n";
      for (std::size_t i = 0; i < s.points.size(); ++i)
        std::cout << "  " << i << ": " << vec_str(s.points[i]) << " -> " << s.sigma[i] << "\n";
      std::cout << "cycles:";
      for (auto c : cycle_type(s.sigma)) std::cout << " " << c;
      std::cout << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
