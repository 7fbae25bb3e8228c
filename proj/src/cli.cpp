#include "gvtools/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gvtools/errors.hpp"
#include "gvtools/fano.hpp"
#include "gvtools/gv.hpp"
#include "gvtools/io.hpp"
#include "gvtools/localcurves.hpp"
#include "gvtools/structure.hpp"

namespace gvt::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct ConfigFlags {
  std::optional<int> rank;
  std::vector<std::string> mass;
  std::optional<std::string> mass_cap;
  std::optional<int> t_order;

  void add_to(CLI::App* app) {
    app->add_option("--rank", rank, "Lattice rank (must match the input header)");
    app->add_option("--mass", mass, "Basis masses as rationals p/q");
    app->add_option("--mass-cap", mass_cap, "Mass cap as a rational");
    app->add_option("--t-order", t_order, "Highest retained t-exponent (even)");
  }

  /// Flags that are given must agree with the header.
  void check(const LatticeConfig& header) const {
    auto mismatch = [](const std::string& what) {
      throw DimensionMismatch(what + " flag disagrees with the input header", 1, 1);
    };
    if (rank && *rank != header.rank) mismatch("--rank");
    if (!mass.empty()) {
      std::vector<Rational> m;
      for (const auto& s : mass) {
        Rational q;
        if (!parse_rational(s, q)) throw ConfigError("--mass: not a rational: " + s);
        m.push_back(q);
      }
      if (m != header.mass_vector) mismatch("--mass");
    }
    if (mass_cap) {
      Rational q;
      if (!parse_rational(*mass_cap, q)) throw ConfigError("--mass-cap: not a rational: " + *mass_cap);
      if (q != header.mass_cap) mismatch("--mass-cap");
    }
    if (t_order && *t_order != header.t_order) mismatch("--t-order");
  }

  /// Config for generators: explicit flags override the seeded random choice.
  LatticeConfig build(std::uint64_t seed) const {
    LatticeConfig c = gen_config(seed, 8, t_order.value_or(14));
    if (!mass.empty()) {
      c.mass_vector.clear();
      for (const auto& s : mass) {
        Rational q;
        if (!parse_rational(s, q)) throw ConfigError("--mass: not a rational: " + s);
        c.mass_vector.push_back(q);
      }
      c.rank = static_cast<int>(c.mass_vector.size());
    } else if (rank && *rank != c.rank) {
      c.rank = *rank;
      c.mass_vector.assign(static_cast<std::size_t>(*rank), Rational(1));
    }
    if (rank && *rank != c.rank) throw ConfigError("--rank disagrees with the number of --mass values");
    if (mass_cap && !parse_rational(*mass_cap, c.mass_cap))
      throw ConfigError("--mass-cap: not a rational: " + *mass_cap);
    c.validate();
    return c;
  }
};

std::string read_input(const std::string& path, Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    buf << io.in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open input file " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

// Writes through a sibling temporary and renames it into place.
void write_output(const std::string& path, const std::string& text, Streams& io) {
  if (path == "-") {
    io.out << text;
    io.out.flush();
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot open output file " + path);
    f << text;
    if (!f.flush()) throw ConfigError("failed writing " + path);
  }
  fs::rename(tmp, target);
}

void report_cutoffs(const InvariantTable& t, std::ostream& os) {
  for (const auto& [a, cut] : t.observed_genus_cutoffs) {
    os << "# class " << a.to_string() << " window g<=" << t.window(a) << " cutoff g0=" << cut << "\n";
  }
  os << "# integrality " << (t.integrality_ok ? "ok" : "FAILED") << "\n";
}

int default_audit_order(int h, int d_max) {
  // Highest observed nonzero genus is 1 + (h-1)·d(d+1)/2; leave one genus of headroom past it.
  int top = h >= 1 ? 1 + (h - 1) * d_max * (d_max + 1) / 2 : 1;
  return 2 * (top + 2) - 2;
}

int verify(std::uint64_t seed, int count, Streams& io) {
  int mismatches = 0;
  auto fail = [&](const std::string& what, std::uint64_t s) {
    ++mismatches;
    io.err << "mismatch: " << what << " (case seed " << s << ")\n";
  };
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i);
    LatticeConfig config = gen_config(s, 8, 14);
    BPSTable bps = gen_bps_table(s, config, 0.3, 6);
    if (!bps_from_gw(gw_from_bps(bps)).same_values(bps)) fail("bps -> gw -> bps", s);

    LatticeConfig small = gen_config(s + 1, 4, 10);
    ETable e = gen_e_table(s, small, 0.3, 4);
    if (!extract_e(series_from_e(e)).same_values(e)) fail("e -> series -> e", s);

    const int c1 = 1 + i % 3;
    auto fb = gen_fano_bps(s, 6);
    if (fano_bps_from_gw(fano_gw_from_bps(c1, fb, 2 * (6 + c1) - 2)) != fb) fail("fano bps -> gw -> bps", s);

    QSeries gw = gen_gw_series(s, config, 0.5);
    std::string text = print(GVFile{gw});
    if (print(parse(text)) != text) fail("print -> parse -> print", s);
  }
  io.out << "verify seed=" << seed << " cases=" << count << " mismatches=" << mismatches << "\n";
  return mismatches == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"gvtool: exact Gopakumar-Vafa / Gromov-Witten transforms"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  bool strict = false;
  bool report = false;
  ConfigFlags flags;
  auto io_opts = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input,-i", input, "Input file or '-' for stdin");
    sub->add_option("--output,-o", output, "Output file or '-' for stdout");
  };

  int h = 0, d_max = 1, c1 = 1, count = 20;
  std::optional<int> t_order_opt;
  std::uint64_t seed = 0;

  auto* gh = app.add_subcommand("gh-series", "Print the local-curve series G_h as a rank-1 GW table");
  gh->add_option("--h", h, "Genus h of the curve")->required()->check(CLI::NonNegativeNumber);
  gh->add_option("--dmax", d_max, "Highest degree")->required()->check(CLI::PositiveNumber);
  gh->add_option("--t-order", t_order_opt, "Highest retained t-exponent (even)")->required();
  io_opts(gh, false);

  auto* b2g = app.add_subcommand("gw-from-bps", "Synthesize the GW series of a BPS table");
  io_opts(b2g, true);
  flags.add_to(b2g);

  auto* g2b = app.add_subcommand("bps-from-gw", "Recover BPS invariants from a GW series");
  io_opts(g2b, true);
  flags.add_to(g2b);
  g2b->add_flag("--strict", strict, "Fail with exit code 4 on a non-integral invariant");
  g2b->add_flag("--report", report, "Write observed genus cutoffs to stderr");

  auto* xe = app.add_subcommand("extract-e", "Expand a GW series in the local-curve basis");
  io_opts(xe, true);
  flags.add_to(xe);
  xe->add_flag("--strict", strict, "Fail with exit code 4 on a non-integral coefficient");
  xe->add_flag("--report", report, "Write observed genus cutoffs to stderr");

  auto* se = app.add_subcommand("series-from-e", "Synthesize a GW series from structure coefficients");
  io_opts(se, true);
  flags.add_to(se);

  auto* fb = app.add_subcommand("fano-bps", "Fano-class BPS transform of a FANO table");
  io_opts(fb, true);
  auto* c1_opt = fb->add_option("--c1", c1, "c_1(A) of the class (must match the rows)")->check(CLI::PositiveNumber);
  fb->add_flag("--strict", strict, "Fail with exit code 4 on a non-integral invariant");

  auto* fg = app.add_subcommand("fano-gw", "Inverse Fano transform: BPS rows to GW rows");
  io_opts(fg, true);
  auto* fg_c1 = fg->add_option("--c1", c1, "c_1(A) of the class")->check(CLI::PositiveNumber);
  fg->add_option("--t-order", t_order_opt, "Highest retained t-exponent (even)");

  auto* au = app.add_subcommand("audit", "Integrality and finiteness audit of BPS_{d,g}(h)");
  au->add_option("--h", h, "Genus h of the curve")->required()->check(CLI::NonNegativeNumber);
  au->add_option("--dmax", d_max, "Highest degree")->required()->check(CLI::PositiveNumber);
  au->add_option("--t-order", t_order_opt, "Highest retained t-exponent (even); default leaves headroom");
  au->add_flag("--strict", strict, "Exit with code 4 unless every entry is an integer");
  io_opts(au, false);

  std::string gen_kind = "bps";
  double density = 0.3;
  int genus_max = 4;
  auto* gen = app.add_subcommand("generate", "Write a seeded random table (for tests and benchmarks)");
  io_opts(gen, false);
  flags.add_to(gen);
  gen->add_option("--kind", gen_kind, "Table kind")->check(CLI::IsMember({"bps", "e", "gw", "fano"}));
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--density", density, "Probability that a (class, genus) slot is filled")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--genus-max", genus_max, "Highest generated genus")->check(CLI::NonNegativeNumber);
  gen->add_option("--c1", c1, "c_1(A) for --kind fano")->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "Seeded roundtrip checks of every transform");
  ve->add_option("--seed", seed, "Base seed")->required();
  ve->add_option("--count", count, "Number of random cases")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*gh) {
      QSeries g = g_series(h, d_max, *t_order_opt);
      write_output(output, print(GVFile{g}), io);
    } else if (*b2g) {
      BPSTable t = parse_as<BPSTable>(read_input(input, io));
      flags.check(t.config);
      write_output(output, print(GVFile{gw_from_bps(t)}), io);
    } else if (*g2b) {
      QSeries s = parse_as<QSeries>(read_input(input, io));
      flags.check(s.config());
      BPSTable t = bps_from_gw(s, InversionOptions{strict});
      if (report) report_cutoffs(t, err);
      write_output(output, print(GVFile{t}), io);
    } else if (*xe) {
      QSeries s = parse_as<QSeries>(read_input(input, io));
      flags.check(s.config());
      ETable e = extract_e(s);
      if (report) report_cutoffs(e, err);
      if (strict && !e.integrality_ok) throw StrictIntegrality("non-integral structure coefficient");
      write_output(output, print(GVFile{e}), io);
    } else if (*se) {
      ETable e = parse_as<ETable>(read_input(input, io));
      flags.check(e.config);
      write_output(output, print(GVFile{series_from_e(e)}), io);
    } else if (*fb) {
      FanoSeries f = parse_as<FanoSeries>(read_input(input, io));
      if (c1_opt->count() && !f.gw_coeffs.empty() && f.c1 != c1)
        throw DimensionMismatch("--c1 disagrees with the input rows", 1, 1);
      if (c1_opt->count()) f.c1 = c1;
      auto bps = fano_bps_from_gw(f);
      if (f.window < f.c1)
        throw ValidityExhausted("window g<=" + std::to_string(f.window) + " determines no BPS coefficient for c1=" +
                                std::to_string(f.c1));
      FanoSeries result{f.c1, {}, f.window - f.c1};
      for (const auto& [g, v] : bps) {
        if (strict && !is_integer(v)) throw StrictIntegrality("non-integral Fano BPS at g=" + std::to_string(g));
        result.gw_coeffs.emplace(g, v);
      }
      write_output(output, "# BPS coefficients\n" + print(GVFile{result}), io);
    } else if (*fg) {
      FanoSeries f = parse_as<FanoSeries>(read_input(input, io));
      if (fg_c1->count()) f.c1 = c1;
      int order = t_order_opt.value_or(2 * (f.window + f.c1) - 2);
      write_output(output, print(GVFile{fano_gw_from_bps(f.c1, f.gw_coeffs, order)}), io);
    } else if (*au) {
      const int order = t_order_opt.value_or(default_audit_order(h, d_max));
      LocalBPS local = local_bps(h, d_max, order);
      std::ostringstream rep;
      rep << "audit h=" << h << " dmax=" << d_max << " t-order=" << order << "\n";
      for (const auto& [key, v] : local.table.entries) {
        rep << "BPS d=" << key.first[0] << " g=" << key.second << " : " << to_string(v) << "\n";
      }
      bool all_inside = true;
      for (const auto& [a, cut] : local.table.observed_genus_cutoffs) {
        const int w = local.table.window(a);
        const bool inside = cut <= w;
        all_inside = all_inside && inside;
        rep << "degree " << a[0] << " window g<=" << w << " cutoff g0=" << cut
            << (inside ? " vanishing-observed" : " vanishing-not-observed") << "\n";
      }
      rep << "integrality " << (local.table.integrality_ok ? "ok" : "FAILED") << "\n";
      rep << "finiteness " << (all_inside ? "observed" : "not-observed") << "\n";
      write_output(output, rep.str(), io);
      if (strict && !local.table.integrality_ok) throw StrictIntegrality("non-integral local BPS invariant");
    } else if (*gen) {
      GVFile f;
      if (gen_kind == "fano") {
        const int order = flags.t_order.value_or(2 * (genus_max + c1) - 2);
        f = fano_gw_from_bps(c1, gen_fano_bps(seed, genus_max), order);
      } else {
        LatticeConfig c = flags.build(seed);
        if (2 * genus_max - 2 > c.t_order && gen_kind != "gw")
          throw ConfigError("--genus-max lies outside the t-window of --t-order");
        if (gen_kind == "bps") f = gen_bps_table(seed, c, density, genus_max);
        else if (gen_kind == "e") f = gen_e_table(seed, c, density, genus_max);
        else f = gen_gw_series(seed, c, density);
      }
      write_output(output, print(f), io);
    } else if (*ve) {
      return verify(seed, count, io);
    }
  } catch (const StrictIntegrality& e) {
    err << "error: " << e.what() << "\n";
    return kStrictError;
  } catch (const ValidityExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kValidityError;
  } catch (const NotAUnit& e) {
    err << "error: " << e.what() << "\n";
    return kValidityError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kValidityError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace gvt::cli
