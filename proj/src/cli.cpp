#include "knot/cli.hpp"

#include "knot/alexander.hpp"
#include "knot/bracket.hpp"
#include "knot/coloring.hpp"
#include "knot/diagram.hpp"
#include "knot/error.hpp"
#include "knot/khovanov.hpp"
#include "knot/reidemeister.hpp"
#include "knot/render.hpp"
#include "knot/states.hpp"
#include "knot/tangle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace knot {
namespace {

// Missing or unreadable input files are usage errors.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw FileError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

FacePair parse_star(const std::string& text) {
  FacePair s;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> s.first >> comma >> s.second) || comma != ',' || !(is >> std::ws).eof())
    throw CLI::ValidationError("--star", "expected two face indices f,g");
  return s;
}

std::string json_integer_field(const char* key, const Integer& v) {
  std::ostringstream os;
  os << '"' << key << "\": " << v;
  return os.str();
}

struct Options {
  std::string file;
  std::string second;
  std::string star;
  std::string pattern;
  std::string field = "Q";
  std::string modulus = "3";
  bool json = false;
  bool regions = false;
  bool inverse = false;
};

FacePair star_for(const LinkDiagram& d, const Options& o) {
  return o.star.empty() ? default_star(d) : parse_star(o.star);
}

void print_poly(std::ostream& out, const Options& o, const char* label, const LaurentPoly& p,
                std::string_view variable, TermOrder order = TermOrder::Descending) {
  if (o.json)
    out << render_poly_json(p) << '\n';
  else
    out << label << " = " << render_poly(p, variable, order) << '\n';
}

int cmd_alexander(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_input(o.file));
  const LaurentPoly p = o.star.empty() ? alexander_poly(d) : dot_canonical(alexander_determinant(d, star_for(d, o)));
  print_poly(out, o, "Delta", p, "x");
  return 0;
}

int cmd_conway(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_input(o.file));
  const LaurentPoly omega = o.star.empty() ? conway_poly(d) : conway_state_sum(d, star_for(d, o));
  if (o.json) {
    out << render_poly_json(omega) << '\n';
    return 0;
  }
  out << "Omega = " << render_poly(omega, "x") << '\n';
  out << "Omega(z) = " << render_poly(to_z_form(omega), "z") << '\n';
  return 0;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  print_poly(out, o, "<K>", bracket(parse_pd(read_input(o.file))), "A");
  return 0;
}

int cmd_jones(const Options& o, std::ostream& out) {
  print_poly(out, o, "V", jones(parse_pd(read_input(o.file))), "t", TermOrder::Ascending);
  return 0;
}

int cmd_det(const Options& o, std::ostream& out) {
  const Integer det = knot_determinant(parse_pd(read_input(o.file)));
  if (o.json)
    out << '{' << json_integer_field("det", det) << "}\n";
  else
    out << det << '\n';
  return 0;
}

int cmd_states(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_input(o.file));
  const FacePair star = star_for(d, o);
  const auto states = enumerate_states(d, star);
  if (o.json) {
    out << "{\"star\": [" << star.first << ", " << star.second << "], \"states\": [";
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (k) out << ", ";
      out << "{\"quadrants\": [";
      for (std::size_t c = 0; c < states[k].quadrant.size(); ++c) out << (c ? ", " : "") << states[k].quadrant[c];
      out << "], \"black_holes\": " << black_hole_count(d, states[k]) << '}';
    }
    out << "]}\n";
    return 0;
  }
  out << "star " << star.first << ',' << star.second << '\n';
  out << "states " << states.size() << '\n';
  for (const auto& s : states) {
    for (std::size_t c = 0; c < s.quadrant.size(); ++c) out << (c ? " " : "") << s.quadrant[c];
    out << "  black holes " << black_hole_count(d, s) << '\n';
  }
  return 0;
}

int cmd_colorings(const Options& o, std::ostream& out) {
  Integer n;
  try {
    n = Integer(o.modulus);
  } catch (const std::runtime_error&) {
    throw CLI::ValidationError("--modulus", "expected an integer");
  }
  const LinkDiagram d = parse_pd(read_input(o.file));
  const ColoringSpace space = o.regions ? region_colorings(d, n) : fox_colorings(d, n);
  const char* kind = o.regions ? "region" : "fox";
  if (o.json) {
    out << "{\"kind\": \"" << kind << "\", " << json_integer_field("modulus", space.modulus) << ", "
        << json_integer_field("count", space.count) << ", " << json_integer_field("nonconstant", space.nonconstant)
        << "}\n";
    return 0;
  }
  out << (o.regions ? "region" : "Fox") << " colorings mod " << space.modulus << ": " << space.count << " ("
      << space.nonconstant << " nonconstant)\n";
  return 0;
}

int cmd_tree_count(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_input(o.file));
  const Universe& u = d.universe();
  const Integer n = spanning_tree_count(checkerboard_graph(u, checkerboard(u)));
  if (o.json)
    out << '{' << json_integer_field("tree_count", n) << "}\n";
  else
    out << n << '\n';
  return 0;
}

int cmd_tangle(const Options& o, std::ostream& out) {
  TangleDiagram t = parse_tangle(read_input(o.file));
  if (!o.pattern.empty()) t = omega_surgery(t, parse_pattern(read_input(o.pattern)), o.inverse);
  const BracketVector br = tangle_bracket(t);
  if (o.json) {
    out << "{\"alpha\": " << render_poly_json(br.alpha) << ", \"beta\": " << render_poly_json(br.beta) << "}\n";
    return 0;
  }
  if (!o.pattern.empty()) out << "tangle " << to_text(t) << '\n';
  out << "alpha = " << render_poly(br.alpha, "A") << '\n';
  out << "beta = " << render_poly(br.beta, "A") << '\n';
  const LaurentPoly d = bracket_delta();
  out << "<N> = " << render_poly(d * br.alpha + br.beta, "A") << '\n';
  out << "<D> = " << render_poly(br.alpha + d * br.beta, "A") << '\n';
  return 0;
}

int cmd_hopf_pair(const Options& o, std::ostream& out) {
  TangleDiagram t = parse_tangle(read_input(o.file));
  TangleDiagram u = parse_tangle(read_input(o.second));
  std::optional<ConservationReport> report;
  if (!o.pattern.empty()) {
    const SurgeryPattern p = parse_pattern(read_input(o.pattern));
    report = conservation_report(p);
    t = omega_surgery(t, p, false);
    u = omega_surgery(u, p, true);
  }
  const LaurentPoly value = pairing_value(tangle_bracket(t), hopf_matrix(), tangle_bracket(u));
  if (o.json) {
    out << render_poly_json(value) << '\n';
    return 0;
  }
  if (report) {
    out << "identity " << (report->identity ? "PASS" : "FAIL") << '\n';
    out << "mirror inverse " << (report->mirror_inverse ? "PASS" : "FAIL") << '\n';
  }
  out << "<H> = " << render_poly(value, "A") << '\n';
  return 0;
}

Field parse_field(const std::string& name) {
  if (name == "Q") return Field::Rational;
  if (name == "Z2") return Field::Mod2;
  throw CLI::ValidationError("--field", "expected Q or Z2");
}

int cmd_khovanov(const Options& o, std::ostream& out) {
  const Field field = parse_field(o.field);
  const LinkDiagram d = parse_pd(read_input(o.file));
  const HomologyTable table = homology(build_complex(d, field));
  if (o.json) {
    out << "{\"field\": \"" << o.field << "\", \"ranks\": [";
    bool first = true;
    for (const auto& [ij, r] : table) {
      out << (first ? "" : ", ") << '[' << ij.first << ", " << ij.second << ", " << r << ']';
      first = false;
    }
    out << "]}\n";
    return 0;
  }
  out << "i j rank\n";
  for (const auto& [ij, r] : table) out << ij.first << ' ' << ij.second << ' ' << r << '\n';
  out << "chi = " << render_poly(graded_euler(table), "q") << '\n';
  return 0;
}

// One line per check. A domain error inside a check is reported as SKIP.
class Verifier {
 public:
  explicit Verifier(std::ostream& out) : out_(out) {}

  void check(const std::string& name, const std::function<bool()>& body) {
    try {
      const bool ok = body();
      out_ << (ok ? "PASS " : "FAIL ") << name << '\n';
      failed_ = failed_ || !ok;
    } catch (const KnotError& e) {
      out_ << "SKIP " << name << " (" << e.name() << ")\n";
    }
  }

  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const LinkDiagram d = parse_pd(read_input(o.file));
  Verifier v(out);
  v.check("state-sum-vs-determinant", [&] {
    const FacePair star = default_star(d);
    return poly_dot_equals(alexander_state_sum(d, star), alexander_determinant(d, star)).has_value();
  });
  v.check("clock-connectivity", [&] {
    if (d.crossing_count() > enumeration_limit(9)) throw KnotError(ErrorKind::TooLarge, "brute-force states");
    const FacePair star = default_star(d);
    return enumerate_states(d, star) == enumerate_states_brute(d, star);
  });
  v.check("black-hole-sign", [&] {
    const FacePair star = default_star(d);
    const StateSumContext ctx = state_context(d, star);
    const auto states = enumerate_states(d, star);
    return std::all_of(states.begin(), states.end(), [&](const StateMarking& s) {
      const int parity = black_hole_count(d, s) % 2 == 0 ? 1 : -1;
      return parity == ctx.epsilon * state_permutation_sign(d, s, ctx);
    });
  });
  v.check("conway-bridge", [&] { return conway_alexander_bridge(d); });
  v.check("skein", [&] {
    if (d.crossing_count() == 0) throw KnotError(ErrorKind::NoState, "no crossings");
    for (int c = 0; c < d.crossing_count(); ++c) {
      const SkeinTriple s = skein_triple(d, c);
      if (!skein_check(s.plus, s.minus, s.zero, s.crossing)) return false;
    }
    return true;
  });
  v.check("bracket-invariance", [&] {
    std::mt19937_64 rng(1);
    const std::vector<Move> moves{Move::R1Positive, Move::R1Negative, Move::R2, Move::R3, Move::R1Remove,
                                  Move::R2Remove};
    const LaurentPoly f = f_poly(d);
    for (int trial = 0; trial < 10; ++trial) {
      LinkDiagram e = d;
      for (int step = 0; step < 3; ++step) e = random_reidemeister(e, rng, moves);
      if (f_poly(e) != f) return false;
    }
    return true;
  });
  v.check("tree-count", [&] {
    if (!d.alternating() || !d.connected()) throw KnotError(ErrorKind::DisconnectedDiagram, "not alternating");
    const Universe& u = d.universe();
    return spanning_tree_count(checkerboard_graph(u, checkerboard(u))) == knot_determinant(d);
  });
  v.check("fox-primes", [&] {
    if (d.component_count() != 1) throw KnotError(ErrorKind::DisconnectedDiagram, "not a knot");
    const Integer det = knot_determinant(d);
    for (int p : {2, 3, 5, 7, 11, 13}) {
      const bool colorable = fox_colorings(d, p).nonconstant > 0;
      if (colorable != (det % p == 0)) return false;
    }
    return true;
  });
  for (const auto& [field, label] : {std::pair{Field::Rational, "Q"}, std::pair{Field::Mod2, "Z2"}}) {
    v.check(std::string("khovanov-d2-") + label, [&, field = field] { return verify_d2(build_complex(d, field)); });
  }
  v.check("khovanov-euler", [&] {
    return graded_euler(homology(build_complex(d, Field::Rational))) == calibrated_jones(jones(d));
  });
  return v.failed() ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot invariants from planar diagram codes", "knot"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto verb = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input file, - for stdin")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
  auto star = [&](CLI::App* sub) { sub->add_option("--star", o.star, "Starred faces f,g"); };

  CLI::App* sub = verb("alexander", "Alexander polynomial", cmd_alexander);
  json(sub);
  star(sub);
  sub = verb("conway", "Conway polynomial from the state sum", cmd_conway);
  json(sub);
  star(sub);
  json(verb("bracket", "Kauffman bracket", cmd_bracket));
  json(verb("jones", "Jones polynomial", cmd_jones));
  json(verb("det", "Knot determinant", cmd_det));
  sub = verb("states", "States of the universe", cmd_states);
  json(sub);
  star(sub);
  sub = verb("colorings", "Fox or region colorings", cmd_colorings);
  json(sub);
  sub->add_option("--modulus", o.modulus, "Modulus N >= 2");
  sub->add_flag("--regions", o.regions, "Count region colorings");
  json(verb("tree-count", "Spanning trees of the checkerboard graph", cmd_tree_count));
  sub = verb("tangle", "Bracket vector of a tangle", cmd_tangle);
  json(sub);
  sub->add_option("--pattern", o.pattern, "Apply a surgery pattern first");
  sub->add_flag("--inverse", o.inverse, "Apply the mirror recipe instead");
  sub = verb("hopf-pair", "Bracket of H(T,U)", cmd_hopf_pair);
  sub->add_option("second", o.second, "Second tangle file")->required();
  json(sub);
  sub->add_option("--pattern", o.pattern, "Pair T^w with U^w-bar");
  sub = verb("khovanov", "Khovanov homology ranks", cmd_khovanov);
  json(sub);
  sub->add_option("--field", o.field, "Q or Z2");
  verb("verify", "Run the cross-check suite", cmd_verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    return action(o, out);
  } catch (const KnotError& e) {
    err << e.name() << '\n';
    return 1;
  } catch (const FileError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace knot
