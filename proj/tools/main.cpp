// hklattice — exact lattice arithmetic for K3 Mukai vectors, Hilbert-scheme
// Beauville-Bogomolov classes, reflection dynamics, and the bundled
// verification suite. All subcommands read JSON (file or stdin via `-`),
// write deterministic JSON to stdout, and report errors as JSON on stderr.
//
// Exit codes: 0 success, 1 verification-suite failure, 2 parse error,
// 3 precondition violation.

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hklattice/checks.hpp"
#include "hklattice/dynamics.hpp"
#include "hklattice/errors.hpp"
#include "hklattice/hilbert.hpp"
#include "hklattice/json_io.hpp"
#include "hklattice/lattice.hpp"
#include "hklattice/mukai.hpp"

namespace {

using namespace hklattice;

struct Options {
  std::string json_path;
  bool pretty = false;
  long long bound = 0;
  long long k = 3;
  long long a = 0;
  bool has_a = false;
  long long g = 0;
  bool has_g = false;
  long long n = 2;
  long long square = 2;
  long long box = 8;
  long long lower = 0;
  bool has_lower = false;
  std::string sign = "paper";
};

void emit(const JsonOut& j, const Options& opt) {
  std::cout << j.dump(opt.pretty) << "\n";
}

JsonIn require_json(const Options& opt) {
  if (opt.json_path.empty())
    throw ParseError("this subcommand needs --json FILE (use - for stdin)");
  return JsonIn::parse_file(opt.json_path);
}

struct K3Problem {
  K3AlgebraicData k3;
  MukaiVector v;
};

// Rank-1 genus-g fixture (NS = Z*ell, (ell,ell) = 2g-2, D = ell) with the
// rank-2 symmetric Mukai vector; the common desk case behind --g.
K3Problem k3_from_genus(long long g) {
  if (g < 2) throw BadArgument("--g must be at least 2");
  Lattice ns(Mat{{Int(2 * g - 2)}});
  return K3Problem{K3AlgebraicData(ns, {1}, {1}), MukaiVector{2, {1}, 2}};
}

K3Problem k3_problem(const Options& opt) {
  if (opt.has_g) return k3_from_genus(opt.g);
  JsonIn in = require_json(opt);
  return K3Problem{in.at("k3").as_k3(), in.at("v").as_mukai()};
}

SignConvention sign_of(const Options& opt) {
  if (opt.sign == "paper") return SignConvention::paper;
  if (opt.sign == "opposite") return SignConvention::opposite;
  throw ParseError("--sign-convention must be paper or opposite");
}

JsonOut spectral_json(const PsiIsometry& psi) {
  SpectralClass s = classify(psi);
  JsonOut o = JsonOut::object();
  o.set("a", JsonOut::integer(psi.a));
  switch (s.kind) {
    case SpectralKind::hyperbolic: {
      o.set("kind", JsonOut::str("hyperbolic"));
      o.set("trace", JsonOut::integer(s.trace));
      o.set("lambda_float", JsonOut::real(lambda_float(psi)));
      JsonOut ex = JsonOut::object();
      ex.set("t", JsonOut::integer(s.trace));
      ex.set("disc", JsonOut::integer(s.disc));
      o.set("lambda_exact", std::move(ex));
      break;
    }
    case SpectralKind::parabolic:
      o.set("kind", JsonOut::str("parabolic"));
      o.set("trace", JsonOut::integer(s.trace));
      break;
    case SpectralKind::elliptic:
      o.set("kind", JsonOut::str("elliptic"));
      o.set("trace", JsonOut::integer(s.trace));
      o.set("order", JsonOut::integer(s.order));
      break;
  }
  return o;
}

PsiIsometry psi_from_input(const Options& opt) {
  if (opt.has_a) {
    Int a(opt.a);
    Lattice plane(Mat{{2, a}, {a, 2}});
    return build_psi(plane, {1, 0}, {0, 1});
  }
  JsonIn in = require_json(opt);
  Lattice l = in.at("lattice").as_lattice();
  return build_psi(l, in.at("h1").as_vec(), in.at("h2").as_vec());
}

int run_check_paper(const Options& opt) {
  auto results = run_all();
  if (opt.pretty) {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name
                << std::string(width - r.name.size() + 2, ' ') << "expected "
                << to_string(r.expected) << ", computed " << to_string(r.computed)
                << "  [" << r.location << "]\n";
    }
  } else {
    for (const auto& r : results) {
      JsonOut o = JsonOut::object();
      o.set("name", JsonOut::str(r.name));
      o.set("expected", JsonOut::str(to_string(r.expected)));
      o.set("computed", JsonOut::str(to_string(r.computed)));
      o.set("passed", JsonOut::boolean(r.passed));
      o.set("location", JsonOut::str(r.location));
      std::cout << o.dump(false) << "\n";
    }
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K3/Hilbert-scheme lattice calculator"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", opt.json_path, "input JSON file, or - for stdin");
    sub->add_flag("--pretty", opt.pretty, "indent output");
    sub->add_option("--sign-convention", opt.sign, "theta sign: paper | opposite")
        ->check(CLI::IsMember({"paper", "opposite"}));
  };

  // ---- lattice ----
  auto* lat = app.add_subcommand("lattice", "integral lattice operations");
  lat->require_subcommand(1);
  {
    auto* sig = lat->add_subcommand("sig", "Sylvester signature of a Gram matrix");
    add_common(sig);
    sig->callback([&] {
      action = [&]() {
        Signature s = signature(require_json(opt).as_lattice());
        JsonOut o = JsonOut::object();
        o.set("positive", JsonOut::integer(s.positive));
        o.set("negative", JsonOut::integer(s.negative));
        o.set("null", JsonOut::integer(s.null));
        emit(o, opt);
        return 0;
      };
    });

    auto* refl = lat->add_subcommand("reflect", "square-2 reflection R_h");
    add_common(refl);
    refl->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice l = in.at("lattice").as_lattice();
        Isometry r = reflection_square2(l, in.at("h").as_vec());
        if (in.has("v")) {
          emit(JsonOut::vec(r.apply(in.at("v").as_vec())), opt);
        } else {
          JsonOut o = JsonOut::object();
          o.set("matrix", JsonOut::vec_list(r.matrix));
          emit(o, opt);
        }
        return 0;
      };
    });

    auto* comp = lat->add_subcommand("complement", "saturated orthogonal complement");
    add_common(comp);
    comp->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice l = in.at("lattice").as_lattice();
        emit(JsonOut::vec_list(orthogonal_complement(l, in.at("vectors").as_vec_list())),
             opt);
        return 0;
      };
    });

    auto* en = lat->add_subcommand("enum", "bounded-norm vectors (negative definite)");
    add_common(en);
    en->add_option("--lower", opt.lower, "norm window lower bound")
        ->each([&](const std::string&) { opt.has_lower = true; });
    en->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice l = in.at("lattice").as_lattice();
        Int lower = opt.has_lower ? Int(opt.lower) : in.at("lower").as_int();
        emit(JsonOut::vec_list(enumerate_bounded_norm(l, lower)), opt);
        return 0;
      };
    });
  }

  // ---- mukai ----
  auto* mk = app.add_subcommand("mukai", "algebraic Mukai lattice of a K3");
  mk->require_subcommand(1);
  auto add_genus = [&](CLI::App* sub) {
    sub->add_option("--g", opt.g, "rank-1 genus-g fixture with v = (2, ell, 2)")
        ->each([&](const std::string&) { opt.has_g = true; });
  };
  {
    auto* dim = mk->add_subcommand("dim", "moduli dimension 2 + <v,v>");
    add_common(dim);
    add_genus(dim);
    dim->callback([&] {
      action = [&]() {
        K3Problem p = k3_problem(opt);
        emit(JsonOut::integer(moduli_dim(p.k3, p.v)), opt);
        return 0;
      };
    });

    auto* vg = mk->add_subcommand("vgeneric", "wall check for the polarization");
    add_common(vg);
    add_genus(vg);
    vg->callback([&] {
      action = [&]() {
        K3Problem p = k3_problem(opt);
        auto [generic, walls] = is_v_generic(p.k3, p.v);
        JsonOut o = JsonOut::object();
        o.set("generic", JsonOut::boolean(generic));
        JsonOut w = JsonOut::array();
        for (const auto& wall : walls) {
          JsonOut e = JsonOut::object();
          e.set("r0", JsonOut::integer(wall.r0));
          e.set("ell0", JsonOut::vec(wall.ell0));
          e.set("m", JsonOut::vec(wall.m));
          w.push(std::move(e));
        }
        o.set("walls", std::move(w));
        emit(o, opt);
        return 0;
      };
    });

    auto* beta = mk->add_subcommand("beta", "involution operator coefficient search");
    add_common(beta);
    add_genus(beta);
    beta->add_option("--bound", opt.bound, "coefficient box |b_i| <= bound");
    beta->callback([&] {
      action = [&]() {
        K3Problem p = k3_problem(opt);
        MukaiVector b = solve_involution_beta(p.k3, p.v, Int(opt.bound));
        emit(JsonOut::vec(lambda_coefficients(p.k3, b, p.v.ell_part)), opt);
        return 0;
      };
    });

    auto* hv = mk->add_subcommand("hv", "the square-2 class eta - 1 in v-perp");
    add_common(hv);
    add_genus(hv);
    hv->callback([&] {
      action = [&]() {
        K3Problem p = k3_problem(opt);
        emit(JsonOut::mukai(h_v(p.k3, p.v)), opt);
        return 0;
      };
    });

    auto* perp = mk->add_subcommand("perp", "saturated basis of v-perp");
    add_common(perp);
    add_genus(perp);
    perp->callback([&] {
      action = [&]() {
        K3Problem p = k3_problem(opt);
        JsonOut a = JsonOut::array();
        for (const auto& b : v_perp_basis(p.k3, p.v)) a.push(JsonOut::mukai(b));
        emit(a, opt);
        return 0;
      };
    });
  }

  // ---- hilbert ----
  auto* hb = app.add_subcommand("hilbert", "Beauville-Bogomolov lattice of Hilb^n");
  hb->require_subcommand(1);
  {
    auto* chi = hb->add_subcommand("chi", "Riemann-Roch section count");
    add_common(chi);
    chi->add_option("--n", opt.n, "half-dimension n");
    chi->add_option("--square", opt.square, "BB square of the class (even)");
    chi->callback([&] {
      action = [&]() {
        emit(JsonOut::integer(rr_chi(static_cast<int>(opt.n), Int(opt.square))), opt);
        return 0;
      };
    });

    auto* d = hb->add_subcommand("d", "dimension of the quadric system d(g)");
    add_common(d);
    d->add_option("--g", opt.g, "genus")->required();
    d->callback([&] {
      action = [&]() {
        emit(JsonOut::integer(dim_quadrics(Int(opt.g))), opt);
        return 0;
      };
    });

    auto* deg2 = hb->add_subcommand("deg2", "square-2 class search mu(m) + t*xi_n");
    add_common(deg2);
    deg2->add_option("--n", opt.n, "Hilbert scheme length n");
    deg2->add_option("--box", opt.box, "coordinate box");
    deg2->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice ns{in.at("ns_gram").as_mat()};
        JsonOut a = JsonOut::array();
        for (const auto& h : degree2_classes(ns, static_cast<int>(opt.n), Int(opt.box)))
          a.push(JsonOut::hilbert(h));
        emit(a, opt);
        return 0;
      };
    });

    auto* th = hb->add_subcommand("theta", "w-perp Mukai vector as a Hilb^2 class");
    add_common(th);
    th->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        K3AlgebraicData k = in.at("k3").as_k3();
        HilbertClass h = theta_w_coords(k, in.at("x").as_mukai(), sign_of(opt));
        emit(JsonOut::hilbert(h), opt);
        return 0;
      };
    });

    auto* sd = hb->add_subcommand("sd", "strange-duality dimension identity");
    add_common(sd);
    sd->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        K3AlgebraicData k = in.at("k3").as_k3();
        auto r = strange_duality_dims(k, in.at("v0").as_mukai(), in.at("v1").as_mukai());
        JsonOut o = JsonOut::object();
        o.set("orthogonal", JsonOut::boolean(r.orthogonal));
        o.set("n0", JsonOut::integer(r.n0));
        o.set("n1", JsonOut::integer(r.n1));
        o.set("chi0", JsonOut::integer(r.chi0));
        o.set("chi1", JsonOut::integer(r.chi1));
        o.set("equal", JsonOut::boolean(r.equal));
        emit(o, opt);
        return 0;
      };
    });
  }

  // ---- dyn ----
  auto* dyn = app.add_subcommand("dyn", "composed square-2 reflections psi");
  dyn->require_subcommand(1);
  auto add_a = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "pairing (h1,h2) on the standard plane fixture")
        ->each([&](const std::string&) { opt.has_a = true; });
  };
  {
    auto* spec = dyn->add_subcommand("spectrum", "spectral classification of psi");
    add_common(spec);
    add_a(spec);
    spec->callback([&] {
      action = [&]() {
        emit(spectral_json(psi_from_input(opt)), opt);
        return 0;
      };
    });

    auto* orb = dyn->add_subcommand("orbit", "iterate psi on a class");
    add_common(orb);
    orb->add_option("--k", opt.k, "number of iterations");
    orb->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice l = in.at("lattice").as_lattice();
        PsiIsometry psi = build_psi(l, in.at("h1").as_vec(), in.at("h2").as_vec());
        emit(JsonOut::vec_list(orbit(psi, in.at("x").as_vec(),
                                     static_cast<int>(opt.k))),
             opt);
        return 0;
      };
    });

    auto* fx = dyn->add_subcommand("fixed", "saturated fixed sublattice of psi");
    add_common(fx);
    fx->callback([&] {
      action = [&]() {
        JsonIn in = require_json(opt);
        Lattice l = in.at("lattice").as_lattice();
        PsiIsometry psi = build_psi(l, in.at("h1").as_vec(), in.at("h2").as_vec());
        emit(JsonOut::vec_list(fixed_sublattice(psi)), opt);
        return 0;
      };
    });
  }

  // ---- check ----
  auto* ck = app.add_subcommand("check", "verification suites");
  ck->require_subcommand(1);
  {
    auto* paper = ck->add_subcommand("paper", "run every bundled numeric check");
    add_common(paper);
    paper->callback([&] {
      action = [&]() { return run_check_paper(opt); };
    });
  }

  try {
    app.parse(argc, argv);
    if (!action) throw ParseError("no subcommand selected");
    return action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    JsonOut o = JsonOut::object();
    o.set("error", JsonOut::str("ParseError"));
    o.set("message", JsonOut::str(e.what()));
    std::cerr << o.dump(false) << "\n";
    return 2;
  } catch (const ParseError& e) {
    JsonOut o = JsonOut::object();
    o.set("error", JsonOut::str(e.code()));
    o.set("message", JsonOut::str(e.what()));
    std::cerr << o.dump(false) << "\n";
    return 2;
  } catch (const Error& e) {
    JsonOut o = JsonOut::object();
    o.set("error", JsonOut::str(e.code()));
    o.set("message", JsonOut::str(e.what()));
    std::cerr << o.dump(false) << "\n";
    return 3;
  }
}
