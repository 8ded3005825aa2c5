#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "treehopf/comodule.hpp"
#include "treehopf/growth.hpp"
#include "treehopf/hopf.hpp"
#include "treehopf/lie.hpp"
#include "treehopf/morphisms.hpp"
#include "treehopf/primitives.hpp"
#include "treehopf/renorm.hpp"
#include "treehopf/serialization.hpp"
#include "treehopf/suites.hpp"

using namespace treehopf;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Bad input that is not a parse error: failed preconditions, bad files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_output = false;

void emit(const std::string &verb, const Json &result) {
  Json out{{"format", "treehopf.result"}, {"version", 1}, {"verb", verb}, {"result", result}};
  std::cout << out.dump(2) << "\n";
}

std::string read_text(const std::string &path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error &e) {
    throw FormatError(path + ": " + e.what());
  }
}

Json json_integer(const Integer &v) {
  if (v.fits_slong_p())
    return Json(v.get_si());
  return Json(v.get_str());
}

std::string join(const std::vector<int> &v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? "," : "") + std::to_string(v[k]);
  return "(" + out + ")";
}

void print_matrix_entries(const ElementMatrix &m, MatrixKind kind) {
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const AlgebraElement &e = m.at(r, c);
      if (e.is_zero() || (kind == MatrixKind::Structure && r == c))
        continue;
      if (kind == MatrixKind::Primitive)
        std::cout << "p[" << r + 1 << "," << c << "] = " << e.str() << "\n";
      else
        std::cout << "Q[" << r << "," << c << "] = " << e.str() << "\n";
    }
}

void emit_matrix(const std::string &verb, const ElementMatrix &m, MatrixKind kind) {
  if (json_output)
    emit(verb, matrix_to_json(m, kind));
  else
    print_matrix_entries(m, kind);
}

StructureMatrix structure_from(const MatrixRecord &rec) {
  return rec.kind == MatrixKind::Structure ? rec.matrix : build_comodule(rec.matrix);
}

void emit_element(const std::string &verb, const AlgebraElement &x) {
  if (json_output)
    emit(verb, element_to_json(x));
  else
    std::cout << x.str() << "\n";
}

void emit_report(const SuiteReport &r) {
  if (json_output) {
    Json checks = Json::array();
    for (const auto &c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    emit("check", {{"suite", r.suite},
                   {"max_weight", r.max_weight},
                   {"seed", r.seed},
                   {"passed", r.ok()},
                   {"checks", checks}});
    return;
  }
  std::cout << "suite " << r.suite << ", max weight " << r.max_weight << ", seed " << r.seed << "\n";
  for (const auto &c : r.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed)
      std::cout << ": " << c.detail;
    std::cout << "\n";
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Computations in the Hopf algebra of rooted trees"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::function<int()> action;
  std::string a, b;

  auto *cop = app.add_subcommand("coproduct", "Coproduct of an element");
  cop->add_option("element", a)->required();
  cop->callback([&] {
    action = [&] {
      TensorElement t = coproduct(AlgebraElement::parse(a));
      if (json_output)
        emit("coproduct", tensor_to_json(t));
      else
        std::cout << t.str() << "\n";
      return kOk;
    };
  });

  auto *ant = app.add_subcommand("antipode", "Antipode of an element");
  ant->add_option("element", a)->required();
  ant->callback([&] {
    action = [&] {
      emit_element("antipode", antipode(AlgebraElement::parse(a)));
      return kOk;
    };
  });

  auto *gr = app.add_subcommand("graft", "Natural growth M T N");
  gr->add_option("m", a)->required();
  gr->add_option("n", b)->required();
  gr->callback([&] {
    action = [&] {
      emit_element("graft", graft(AlgebraElement::parse(a), AlgebraElement::parse(b)));
      return kOk;
    };
  });

  auto *p1 = app.add_subcommand("pi1", "Projection onto primitives");
  p1->add_option("element", a)->required();
  p1->callback([&] {
    action = [&] {
      emit_element("pi1", pi1(AlgebraElement::parse(a)));
      return kOk;
    };
  });

  auto *dp = app.add_subcommand("degp", "Primitive filtration degree");
  dp->add_option("element", a)->required();
  dp->callback([&] {
    action = [&] {
      AlgebraElement x = AlgebraElement::parse(a);
      if (x.is_zero())
        throw UsageError("deg_p of 0 is undefined");
      int d = deg_p(x);
      if (json_output)
        emit("degp", d);
      else
        std::cout << d << "\n";
      return kOk;
    };
  });

  auto *dec = app.add_subcommand("decompose", "Components along the chain layers");
  dec->add_option("element", a)->required();
  dec->callback([&] {
    action = [&] {
      Decomposition d = decompose(AlgebraElement::parse(a));
      if (json_output) {
        Json comps = Json::object();
        for (const auto &[j, c] : d.components)
          comps[std::to_string(j)] = element_to_json(c);
        emit("decompose", {{"scalar", to_string(d.scalar)}, {"components", comps}});
      } else {
        std::cout << "scalar: " << to_string(d.scalar) << "\n";
        for (const auto &[j, c] : d.components)
          std::cout << j << ": " << c.str() << "\n";
      }
      return kOk;
    };
  });

  int weight = 0;
  auto *pb = app.add_subcommand("prim-basis", "Basis of the primitives of a weight");
  pb->add_option("n", weight)->required()->check(CLI::Range(1, 12));
  pb->callback([&] {
    action = [&] {
      const PrimitiveBasis &basis = primitive_basis(weight);
      if (json_output) {
        Json items = Json::array();
        for (std::size_t k = 0; k < basis.elements.size(); ++k)
          items.push_back({{"source", basis.sources[k].str()},
                           {"element", element_to_json(basis.elements[k])}});
        emit("prim-basis", {{"weight", weight}, {"dimension", basis.elements.size()}, {"basis", items}});
      } else {
        for (std::size_t k = 0; k < basis.elements.size(); ++k)
          std::cout << "pi1(" << basis.sources[k].str() << ") = " << basis.elements[k].str() << "\n";
      }
      return kOk;
    };
  });

  auto *dims = app.add_subcommand("dims", "Dimension table r_n, h_{n,k}");
  int dims_n = 8;
  dims->add_option("N", dims_n)->check(CLI::Range(1, 200))->capture_default_str();
  dims->callback([&] {
    action = [&] {
      DimensionTable t = dimension_table(dims_n);
      if (json_output) {
        Json n = Json::array(), r = Json::array(), h1 = Json::array(), h = Json::array();
        for (int w = 1; w <= dims_n; ++w) {
          n.push_back(w);
          r.push_back(json_integer(t.r[w]));
          h1.push_back(json_integer(t.h[w][1]));
          Json row = Json::array();
          for (int k = 1; k <= w; ++k)
            row.push_back(json_integer(t.h[w][k]));
          h.push_back(row);
        }
        emit("dims", {{"n", n},
                      {"r", r},
                      {"h", h1},
                      {"bigraded", h},
                      {"series_identities_hold", t.series_identities_hold}});
      } else {
        auto row = [&](const std::string &label, auto value) {
          std::cout << label << ":";
          for (int w = 1; w <= dims_n; ++w)
            std::cout << " " << value(w);
          std::cout << "\n";
        };
        row("n", [](int w) { return std::to_string(w); });
        row("r", [&](int w) { return t.r[w].get_str(); });
        row("h", [&](int w) { return t.h[w][1].get_str(); });
      }
      return kOk;
    };
  });

  auto *br = app.add_subcommand("bracket", "Lie bracket of two tree generators");
  br->add_option("t1", a)->required();
  br->add_option("t2", b)->required();
  br->callback([&] {
    action = [&] {
      LieElement l = bracket(RootedTree::parse(a), RootedTree::parse(b));
      if (json_output) {
        Json terms = Json::array();
        for (const auto &[t, c] : l.terms())
          terms.push_back({{"coefficient", to_string(c)}, {"tree", t.str()}});
        emit("bracket", {{"text", l.str()}, {"terms", terms}});
      } else {
        std::cout << l.str() << "\n";
      }
      return kOk;
    };
  });

  auto *pr = app.add_subcommand("pair", "Pairing of a word with an element");
  pr->add_option("word", a, "Trees joined by '.'")->required();
  pr->add_option("element", b)->required();
  pr->callback([&] {
    action = [&] {
      Rational v = pair(parse_word(a), AlgebraElement::parse(b));
      if (json_output)
        emit("pair", to_string(v));
      else
        std::cout << to_string(v) << "\n";
      return kOk;
    };
  });

  auto *sh = app.add_subcommand("shuffle", "Shuffle product a * b transported to forests");
  sh->add_option("a", a)->required();
  sh->add_option("b", b)->required();
  sh->callback([&] {
    action = [&] {
      AlgebraElement x = AlgebraElement::parse(a), y = AlgebraElement::parse(b);
      if (json_output)
        emit("shuffle", {{"element", element_to_json(star(x, y))},
                         {"chains", gr_to_json(shuffle_product(to_gr(x), to_gr(y)))}});
      else
        std::cout << star(x, y).str() << "\n";
      return kOk;
    };
  });

  // comodule
  auto *com = app.add_subcommand("comodule", "Comodules from families of primitives");
  com->require_subcommand(1);
  com->fallthrough();
  std::string file, matrix_file;
  auto *cbuild = com->add_subcommand("build", "Structure matrix of a primitive family");
  cbuild->add_option("file", file, "Primitive record, - for stdin")->required();
  cbuild->callback([&] {
    action = [&] {
      MatrixRecord rec = matrix_from_json(read_json(file));
      if (rec.kind != MatrixKind::Primitive)
        throw UsageError("build needs a primitive record");
      emit_matrix("comodule build", build_comodule(rec.matrix), MatrixKind::Structure);
      return kOk;
    };
  });
  auto *cverify = com->add_subcommand("verify", "Coassociativity of a structure matrix");
  cverify->add_option("file", file)->required();
  cverify->callback([&] {
    action = [&] {
      bool ok = verify_coassociative(structure_from(matrix_from_json(read_json(file))));
      if (json_output)
        emit("comodule verify", {{"coassociative", ok}});
      else
        std::cout << (ok ? "coassociative" : "not coassociative") << "\n";
      return ok ? kOk : kFailed;
    };
  });
  auto *cflag = com->add_subcommand("flag", "Complete flag of subcomodules");
  cflag->add_option("file", file)->required();
  cflag->callback([&] {
    action = [&] {
      Flag f = flag(structure_from(matrix_from_json(read_json(file))));
      if (json_output) {
        emit("comodule flag",
             {{"dims", f.dims}, {"type", f.type}, {"basis", rational_matrix_to_json(f.basis)}});
      } else {
        std::cout << "dims:";
        for (int d : f.dims)
          std::cout << " " << d;
        std::cout << "\ntype: " << join(f.type) << "\nbasis:\n";
        for (const auto &row : f.basis) {
          for (std::size_t k = 0; k < row.size(); ++k)
            std::cout << (k ? " " : "  ") << to_string(row[k]);
          std::cout << "\n";
        }
      }
      return kOk;
    };
  });
  auto *ctype = com->add_subcommand("type", "Type of a reduced family");
  ctype->add_option("file", file)->required();
  ctype->callback([&] {
    action = [&] {
      MatrixRecord rec = matrix_from_json(read_json(file));
      std::optional<std::vector<int>> reduced;
      if (rec.kind == MatrixKind::Primitive)
        reduced = is_reduced(rec.matrix);
      Flag f = flag(structure_from(rec));
      if (json_output) {
        Json r = reduced ? Json(*reduced) : Json(nullptr);
        emit("comodule type", {{"reduced_type", r}, {"flag_type", f.type}});
      } else {
        std::cout << "reduced type: " << (reduced ? join(*reduced) : "not reduced") << "\n";
        std::cout << "flag type: " << join(f.type) << "\n";
      }
      return kOk;
    };
  });
  auto *cext = com->add_subcommand("extract", "Primitive family of a structure matrix");
  cext->add_option("file", file)->required();
  cext->callback([&] {
    action = [&] {
      MatrixRecord rec = matrix_from_json(read_json(file));
      if (rec.kind != MatrixKind::Structure)
        throw UsageError("extract needs a structure record");
      emit_matrix("comodule extract", extract_family(rec.matrix), MatrixKind::Primitive);
      return kOk;
    };
  });
  auto *cact = com->add_subcommand("act", "g P g^-1 for g in the parabolic subgroup");
  cact->add_option("file", file)->required();
  cact->add_option("--matrix", matrix_file, "Rational matrix as rows")->required();
  cact->callback([&] {
    action = [&] {
      MatrixRecord rec = matrix_from_json(read_json(file));
      if (rec.kind != MatrixKind::Primitive)
        throw UsageError("act needs a primitive record");
      Matrix g = rational_matrix_from_json(read_json(matrix_file));
      try {
        emit_matrix("comodule act", act(g, rec.matrix), MatrixKind::Primitive);
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
      return kOk;
    };
  });

  // endo
  auto *endo = app.add_subcommand("endo", "Bialgebra endomorphisms from families");
  endo->require_subcommand(1);
  endo->fallthrough();
  std::string family_file, images_file;
  int bound = 0;
  auto *eapply = endo->add_subcommand("apply", "Apply the endomorphism of a family");
  eapply->add_option("--family", family_file, "Family record")->required();
  eapply->add_option("element", a)->required();
  eapply->callback([&] {
    action = [&] {
      AlgebraElement x = AlgebraElement::parse(a);
      FamilyEndomorphism phi(family_from_json(read_json(family_file)), std::max(0, max_weight(x)));
      emit_element("endo apply", phi(x));
      return kOk;
    };
  });
  auto *erec = endo->add_subcommand("recover", "Recover the family of an endomorphism");
  auto *fam_opt = erec->add_option("--family", family_file, "Endomorphism given by a family");
  auto *img_opt =
      erec->add_option("--images", images_file, "Endomorphism given by its values on trees");
  fam_opt->excludes(img_opt);
  erec->add_option("--max-weight", bound)->required()->check(CLI::Range(1, 8));
  erec->callback([&] {
    action = [&] {
      ForestMap f;
      std::shared_ptr<FamilyEndomorphism> phi;
      if (!family_file.empty()) {
        phi = std::make_shared<FamilyEndomorphism>(family_from_json(read_json(family_file)), bound);
        f = [phi](const Forest &g) { return (*phi)(g); };
      } else if (!images_file.empty()) {
        auto images = std::make_shared<TreeFamily>(family_from_json(read_json(images_file)));
        f = [images](const Forest &g) {
          AlgebraElement out = AlgebraElement::scalar(1);
          for (auto t : g.trees()) {
            auto it = images->find(t);
            out = out * (it == images->end() ? AlgebraElement() : it->second);
          }
          return out;
        };
      } else {
        throw UsageError("recover needs --family or --images");
      }
      if (!is_bialgebra_morphism(f, bound)) {
        std::cerr << "not a bialgebra morphism up to weight " << bound << "\n";
        return kFailed;
      }
      TreeFamily family = recover_family(f, bound);
      if (json_output) {
        emit("endo recover", family_to_json(family));
      } else {
        for (const auto &[t, p] : family)
          std::cout << t.str() << " -> " << p.str() << "\n";
      }
      return kOk;
    };
  });

  // xi
  auto *xi = app.add_subcommand("xi", "The isomorphism onto the shuffle product");
  int xi_bound = 4;
  bool xi_verify = false;
  xi->add_option("--max-weight", xi_bound)->capture_default_str();
  xi->add_flag("--verify", xi_verify, "Check the defining properties");
  xi->callback([&] {
    action = [&] {
      if (xi_bound < 1 || xi_bound > kXiMaxWeight)
        throw UsageError("--max-weight must lie in 1.." + std::to_string(kXiMaxWeight));
      XiIsomorphism iso = xi_isomorphism(xi_bound);
      XiReport report;
      if (xi_verify)
        report = iso.verify();
      if (json_output) {
        Json weights = Json::array();
        for (const auto &[w, images] : iso.images) {
          Json imgs = Json::array();
          for (std::size_t k = 0; k < images.size(); ++k)
            imgs.push_back({{"forest", enumerate_forests(w)[k].str()}, {"image", images[k].str()}});
          weights.push_back(
              {{"weight", w}, {"images", imgs}, {"matrix", rational_matrix_to_json(iso.matrix(w))}});
        }
        Json out{{"max_weight", xi_bound}, {"weights", weights}};
        if (xi_verify)
          out["report"] = {{"weight_preserved", report.weight_preserved},
                           {"deg_p_preserved", report.deg_p_preserved},
                           {"coproduct_compatible", report.coproduct_compatible},
                           {"multiplicative", report.multiplicative},
                           {"fixes_primitives", report.fixes_primitives},
                           {"invertible", report.invertible}};
        emit("xi", out);
      } else {
        for (const auto &[w, images] : iso.images)
          for (std::size_t k = 0; k < images.size(); ++k)
            std::cout << enumerate_forests(w)[k].str() << " -> " << images[k].str() << "\n";
        if (xi_verify) {
          auto line = [](const char *name, bool v) {
            std::cout << (v ? "PASS " : "FAIL ") << name << "\n";
          };
          line("weight preserved", report.weight_preserved);
          line("deg_p preserved", report.deg_p_preserved);
          line("coproduct compatible", report.coproduct_compatible);
          line("multiplicative", report.multiplicative);
          line("fixes primitives", report.fixes_primitives);
          line("invertible", report.invertible);
        }
      }
      return xi_verify && !report.ok() ? kFailed : kOk;
    };
  });

  // renorm
  auto *ren = app.add_subcommand("renorm", "Counterterm or renormalized expression of a tree");
  std::string form = "renormalized";
  ren->add_option("tree", a)->required();
  ren->add_option("--form", form)
      ->check(CLI::IsMember({"counterterm", "renormalized"}))
      ->capture_default_str();
  ren->callback([&] {
    action = [&] {
      RootedTree t = RootedTree::parse(a);
      RenormExpression e = form == "counterterm" ? counterterm(t) : renormalized(t);
      if (json_output)
        emit("renorm", renorm_to_json(e));
      else
        std::cout << e.str() << "\n";
      return kOk;
    };
  });

  // check
  auto *chk = app.add_subcommand("check", "Run an invariant suite");
  std::string suite;
  int suite_weight = 0;
  std::uint64_t seed = 1;
  chk->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  chk->add_option("--max-weight", suite_weight, "Defaults depend on the suite");
  chk->add_option("--seed", seed)->capture_default_str();
  chk->callback([&] {
    action = [&] {
      SuiteReport r = run_suite(suite, suite_weight, seed);
      emit_report(r);
      return r.ok() ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  json_output = format == "json";
  try {
    return action();
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError &e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
}
