#include "ybk/cli/run.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybk/common/error.hpp"
#include "ybk/modalg/group_ring.hpp"
#include "ybk/ybcore/constructors.hpp"
#include "ybk/ybcore/extension.hpp"
#include "ybk/ybcore/io.hpp"
#include "ybk/ybcore/omega.hpp"
#include "ybk/ybhomology/chain.hpp"
#include "ybk/ybhomology/cohomology.hpp"
#include "ybk/ybhomology/obstruction.hpp"
#include "ybk/vknots/coloring.hpp"

namespace ybk::cli {

namespace {

using nlohmann::json;
using ybcore::CochainTable;
using ybcore::Elem;
using ybcore::FiniteYBSet;

struct Source {
  std::string affine, block, omega, table;
};

struct Common {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t max_cells = 0;
};

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

void add_source(CLI::App* sub, Source& s) {
  sub->add_option("--affine", s.affine, "affine biquandle q,s,t[,u] on Z_q");
  sub->add_option("--block", s.block, "block-matrix solution q,s,t on Z_q^2");
  sub->add_option("--omega", s.omega, "truncated ring q,h,k");
  sub->add_option("--table", s.table, "YB set JSON file");
}

FiniteYBSet load(const Source& s) {
  const int given = !s.affine.empty() + !s.block.empty() + !s.omega.empty() + !s.table.empty();
  if (given != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of --affine, --block, --omega, --table");
  if (!s.affine.empty()) {
    const auto v = parse_ints(s.affine, "--affine");
    if (v.size() != 3 && v.size() != 4) throw Error(ErrorKind::InvalidArgument, "--affine takes q,s,t[,u]");
    return ybcore::make_affine({v[0], v[1], v[2], v.size() == 4 ? v[3] : 1});
  }
  if (!s.block.empty()) {
    const auto v = parse_ints(s.block, "--block");
    if (v.size() != 3) throw Error(ErrorKind::InvalidArgument, "--block takes q,s,t");
    return ybcore::make_block(v[0], v[1], v[2]);
  }
  if (!s.omega.empty()) {
    const auto v = parse_ints(s.omega, "--omega");
    if (v.size() != 3) throw Error(ErrorKind::InvalidArgument, "--omega takes q,h,k");
    return ybcore::make_omega(v[0], v[1], v[2]);
  }
  return ybcore::yb_set_from_json(ybcore::read_json_file(s.table));
}

CochainTable load_cochain(const std::string& path, const FiniteYBSet& x) {
  CochainTable f = ybcore::cochain_from_json(ybcore::read_json_file(path));
  if (f.set_size() != x.size()) {
    throw Error(ErrorKind::ArityMismatch, path + ": cochain is on a set of size " + std::to_string(f.set_size()) +
                                              ", YB set has " + std::to_string(x.size()));
  }
  return f;
}

std::string join(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string tuple_text(std::span<const Elem> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string group_text(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " + Z_" : "Z_") + std::to_string(factors[i]);
  return s;
}

json flags_json(const FiniteYBSet& x) {
  const auto& f = x.verified();
  return {{"size", x.size()}, {"ybe", f.ybe}, {"birack", f.birack}, {"biquandle", f.biquandle}};
}

void print_flags(const FiniteYBSet& x, std::ostream& out) {
  const auto& f = x.verified();
  out << "size       " << x.size() << '\n'
      << "ybe        " << (f.ybe ? "true" : "false") << '\n'
      << "birack     " << (f.birack ? "true" : "false") << '\n'
      << "biquandle  " << (f.biquandle ? "true" : "false") << '\n';
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotBiquandle:
    case ErrorKind::NotACocycle:
    case ErrorKind::NotDivisible:
    case ErrorKind::Inconsistent:
    case ErrorKind::Incomplete:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Yang-Baxter sets, their cubical cohomology, and state-sum invariants of virtual closed braids",
               "ybk"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "JSON output");
  app.add_option("--threads", common.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--max-cells", common.max_cells, "row cap for coboundary matrices (default 200000 or YBK_MAX_CELLS)");

  Source src;
  std::string word, cocycle_path, tuple_arg, psi1_path, psi2_path, target;
  std::optional<std::uint32_t> strands;
  std::uint32_t dim = 2;
  std::int64_t modulus = 0;
  bool type_one = false, list = false, dump = false;
  int from = -1, to = -1;

  auto* verify = app.add_subcommand("verify", "check the YBE, birack and biquandle axioms");
  add_source(verify, src);
  verify->add_flag("--dump", dump, "print the set in the JSON file format");

  auto* witness = app.add_subcommand("witness", "print the biquandle fixed-pair maps x_a, y_a");
  add_source(witness, src);

  auto* color = app.add_subcommand("color", "count colorings of a closed braid");
  add_source(color, src);
  color->add_option("--word", word, "braid word, e.g. \"s1 v1 s1^-1\"")->required();
  color->add_option("--strands", strands, "strand count (default 1 + max index)");
  color->add_flag("--list", list, "also list the fixed tuples");

  auto* invariant = app.add_subcommand("invariant", "state-sum invariant of a closed braid");
  add_source(invariant, src);
  invariant->add_option("--word", word, "braid word")->required();
  invariant->add_option("--strands", strands, "strand count (default 1 + max index)");
  invariant->add_option("--cocycle", cocycle_path, "2-cochain JSON file")->required();

  auto* bound = app.add_subcommand("boundary", "boundary of a tuple");
  add_source(bound, src);
  bound->add_option("--tuple", tuple_arg, "comma separated elements, at least two")->required();

  auto* cocycles = app.add_subcommand("cocycles", "generators of the cocycle module Z^n(X; Z_m)");
  add_source(cocycles, src);
  cocycles->add_option("--dim", dim, "cochain arity n")->check(CLI::Range(1u, 6u));
  cocycles->add_option("--modulus", modulus, "coefficient modulus m")->required();
  cocycles->add_flag("--type-one", type_one, "impose f(x_a, a) = 0 = f(a, y_a) (n = 2)");

  auto* cohom = app.add_subcommand("cohomology", "invariant factors of H^n(X; Z_m)");
  add_source(cohom, src);
  cohom->add_option("--dim", dim, "degree n")->check(CLI::Range(1u, 6u));
  cohom->add_option("--modulus", modulus, "coefficient modulus m")->required();

  auto* obstruct = app.add_subcommand("obstruct", "obstruction cocycle of a Z_p cocycle along Z_p -> Z_p^2 -> Z_p");
  add_source(obstruct, src);
  obstruct->add_option("--cocycle", cocycle_path, "cochain JSON file")->required();

  auto* ext = app.add_subcommand("extend", "extension Z_m x X by 2-cochains psi1, psi2");
  add_source(ext, src);
  ext->add_option("--modulus", modulus, "modulus m of both cochains")->required();
  ext->add_option("--psi1", psi1_path, "2-cochain JSON file")->required();
  ext->add_option("--psi2", psi2_path, "2-cochain JSON file")->required();
  ext->add_flag("--dump", dump, "print the extension in the JSON file format");

  auto* repro = app.add_subcommand("reproduce", "recompute the reference tables and compare");
  repro->add_option("target", target, "table1 | torus | virtual | z3 | borromean | all")->required();
  repro->add_option("--from", from, "first n of a family");
  repro->add_option("--to", to, "last n of a family");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (repro->parsed()) return reproduce(target, from, to, common.json, common.threads, out, err);

    const FiniteYBSet x = load(src);
    vknots::ScanOptions opt;
    opt.threads = common.threads;

    if (verify->parsed()) {
      const auto rep = ybcore::verify_ybe(x, common.threads);
      if (dump) {
        out << ybcore::to_json(x).dump() << '\n';
      } else if (common.json) {
        json j = flags_json(x);
        if (rep.first_failure) j["ybe_failure"] = *rep.first_failure;
        out << j.dump(2) << '\n';
      } else {
        print_flags(x, out);
        if (rep.first_failure) out << "ybe fails at " << tuple_text(*rep.first_failure) << '\n';
      }
      return x.verified().ybe ? kOk : kCheckFailed;
    }

    if (witness->parsed()) {
      const auto w = ybcore::biquandle_witness(x);
      if (common.json) {
        out << json{{"x_of", w.x_of}, {"y_of", w.y_of}}.dump(2) << '\n';
      } else {
        out << "a    x_a  y_a\n";
        for (Elem a = 0; a < x.size(); ++a) out << a << "    " << w.x_of[a] << "    " << w.y_of[a] << '\n';
      }
      return kOk;
    }

    if (color->parsed()) {
      const auto w = vknots::parse_braid(word, strands);
      if (!list) {
        const auto n = vknots::count_colorings(x, w, opt);
        if (common.json) out << json{{"colorings", n}}.dump() << '\n';
        else out << n << '\n';
        return kOk;
      }
      const auto set = vknots::colorings(x, w, opt);
      if (common.json) {
        out << json{{"colorings", set.fixed.size()}, {"tuples", set.fixed}}.dump() << '\n';
      } else {
        out << set.fixed.size() << '\n';
        for (const auto& t : set.fixed) out << tuple_text(t) << '\n';
      }
      return kOk;
    }

    if (invariant->parsed()) {
      const auto w = vknots::parse_braid(word, strands);
      const CochainTable psi = load_cochain(cocycle_path, x);
      if (!ybhomology::is_cocycle(x, psi) || !ybhomology::is_type_one(x, psi)) {
        err << "note: the cochain is not a type-I 2-cocycle; the value need not be a link invariant\n";
      }
      const auto value = vknots::state_sum(x, psi, w, opt);
      if (common.json) {
        out << json{{"colorings", value.augmentation().convert_to<std::uint64_t>()}, {"value", modalg::to_json(value)}}.dump() << '\n';
      } else {
        out << modalg::render(value) << '\n';
      }
      return kOk;
    }

    if (bound->parsed()) {
      std::vector<Elem> t;
      for (auto v : parse_ints(tuple_arg, "--tuple")) {
        if (v < 0 || v >= static_cast<std::int64_t>(x.size())) {
          throw Error(ErrorKind::IndexOutOfRange, "--tuple entry " + std::to_string(v) + " outside the set");
        }
        t.push_back(static_cast<Elem>(v));
      }
      const auto chain = ybhomology::boundary(x, t);
      if (common.json) out << ybhomology::to_json(chain).dump() << '\n';
      else out << ybhomology::render(chain) << '\n';
      return kOk;
    }

    if (cocycles->parsed()) {
      const auto gens = ybhomology::cocycle_space(x, dim, modulus, type_one, common.max_cells);
      if (common.json) {
        json arr = json::array();
        for (const auto& g : gens) arr.push_back(ybcore::to_json(g));
        out << json{{"dimension", dim}, {"modulus", modulus}, {"type_one", type_one}, {"generators", arr}}.dump()
            << '\n';
      } else {
        out << gens.size() << " generators\n";
        for (const auto& g : gens) out << join(g.values(), " ") << '\n';
      }
      return kOk;
    }

    if (cohom->parsed()) {
      const auto rep = ybhomology::cohomology_group(x, dim, modulus, common.max_cells);
      if (common.json) {
        out << ybhomology::to_json(rep).dump() << '\n';
      } else {
        out << "H^" << dim << " = " << group_text(rep.invariant_factors) << '\n'
            << "Z^" << dim << " = " << group_text(rep.cocycle_factors) << '\n'
            << "B^" << dim << " = " << group_text(rep.coboundary_factors) << '\n';
      }
      return kOk;
    }

    if (obstruct->parsed()) {
      const CochainTable f = load_cochain(cocycle_path, x);
      const CochainTable psi = ybhomology::obstruction_cocycle(x, f);
      out << ybcore::to_json(psi).dump() << '\n';
      return kOk;
    }

    if (ext->parsed()) {
      const CochainTable p1 = load_cochain(psi1_path, x), p2 = load_cochain(psi2_path, x);
      const FiniteYBSet v = ybcore::extend(x, modulus, p1, p2);
      const bool sum_cocycle = ybhomology::is_cocycle(x, p1 + p2);
      if (dump) {
        out << ybcore::to_json(v).dump() << '\n';
      } else if (common.json) {
        json j = flags_json(v);
        j["psi_sum_is_cocycle"] = sum_cocycle;
        out << j.dump(2) << '\n';
      } else {
        print_flags(v, out);
        out << "psi1 + psi2 cocycle  " << (sum_cocycle ? "true" : "false") << '\n';
      }
      return v.verified().ybe ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  }
  return kUsage;
}

}  // namespace ybk::cli
