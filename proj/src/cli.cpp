#include "qlink/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qlink/aw.hpp"
#include "qlink/braid.hpp"
#include "qlink/errors.hpp"
#include "qlink/invariant.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/serialize.hpp"

namespace qlink::cli {

namespace {

using braid::ColoredBraid;
using nlohmann::json;

struct BraidInput {
  std::string braid;
  std::string colors;

  void add_to(CLI::App* app) {
    app->add_option("--braid", braid, "braid text \"n=2; 1 1\" or a file containing it")->required();
    app->add_option("--colors", colors, "comma-separated spins, overriding any colors= field");
  }

  ColoredBraid load() const {
    std::string text = braid;
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
      std::ifstream in(text);
      std::stringstream buf;
      buf << in.rdbuf();
      text = buf.str();
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    ColoredBraid b = braid::parse_colored(text);
    if (colors.empty()) return b;
    std::vector<Spin> spins;
    std::stringstream list(colors);
    for (std::string item; std::getline(list, item, ',');) spins.push_back(Spin::parse(item));
    return ColoredBraid(b.word, std::move(spins));
  }
};

void require_fundamental(const ColoredBraid& b, const std::string& what) {
  for (const Spin& c : b.colors) {
    if (c != Spin::half()) throw UsageError(what + " needs every strand colored 1/2");
  }
}

int emit_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << io::report_to_json(r).dump(2) << "\n";
  } else {
    out << r.to_text();
  }
  return r.pass() ? ok : check_failed;
}

std::vector<std::string> reversed(const std::vector<std::string>& args) { return {args.rbegin(), args.rend()}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quantum-group link invariants and Askey-Wilson checks", "qlink"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  // invariant
  CLI::App* inv = app.add_subcommand("invariant", "evaluate a link invariant of a braid closure");
  BraidInput inv_braid;
  inv_braid.add_to(inv);
  std::string method = "rt";
  std::string normalize = "none";
  std::string inv_output = "text";
  inv->add_option("--method", method)->check(CLI::IsMember({"rt", "bracket", "cs"}));
  inv->add_option("--normalize", normalize)->check(CLI::IsMember({"none", "ambient"}));
  inv->add_option("--output", inv_output)->check(CLI::IsMember(formats));

  // rmatrix
  CLI::App* rm = app.add_subcommand("rmatrix", "dump an R-matrix as JSON");
  std::string rm_spins;
  std::string variant = "plain";
  std::string rm_output = "json";
  rm->add_option("--spins", rm_spins, "two spins, e.g. 1/2,1")->required();
  rm->add_option("--variant", variant)
      ->check(CLI::IsMember({"plain", "inverse", "braided", "braided-inverse", "opposite"}));
  rm->add_option("--output", rm_output)->check(CLI::IsMember(formats));

  // verify
  CLI::App* ver = app.add_subcommand("verify", "run an identity check; exit 2 if it fails");
  ver->require_subcommand(1);
  std::string ver_output = "text";
  ver->add_option("--output", ver_output)->check(CLI::IsMember(formats));

  CLI::App* skein = ver->add_subcommand("skein");
  BraidInput skein_braid;
  skein_braid.add_to(skein);
  int generator = 1;
  skein->add_option("--generator", generator, "crossing index i of sigma_i");

  CLI::App* framing = ver->add_subcommand("framing");
  BraidInput framing_braid;
  framing_braid.add_to(framing);
  std::size_t strand = 1;
  framing->add_option("--strand", strand, "1-based strand to kink")->check(CLI::PositiveNumber);

  CLI::App* recursion = ver->add_subcommand("recursion");
  BraidInput recursion_braid;
  recursion_braid.add_to(recursion);
  std::size_t component = 1;
  recursion->add_option("--component", component, "1-based component to cable")->check(CLI::PositiveNumber);

  CLI::App* factorization = ver->add_subcommand("factorization");
  BraidInput fact_a;
  fact_a.add_to(factorization);
  std::string other_braid;
  std::string other_colors;
  factorization->add_option("--other", other_braid, "second braid")->required();
  factorization->add_option("--other-colors", other_colors);

  CLI::App* markov = ver->add_subcommand("markov");
  BraidInput markov_braid;
  markov_braid.add_to(markov);
  std::string conjugator = "1";
  markov->add_option("--conjugator", conjugator, "letters of the conjugating braid");

  CLI::App* awcmd = ver->add_subcommand("aw");
  std::string aw_spins;
  std::string suite = "all";
  awcmd->add_option("--spins", aw_spins, "three spins, e.g. 1/2,1,1/2")->required();
  awcmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"relations", "routes", "expansion", "p-props", "tl-iso", "spectrum", "all"}));

  // Subcommands accept the verify-level --output after their own flags too.
  for (CLI::App* sub : {skein, framing, recursion, factorization, markov, awcmd}) {
    sub->add_option("--output", ver_output)->check(CLI::IsMember(formats));
  }

  try {
    std::vector<std::string> argv = reversed(args);
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "qlink: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*inv) {
      const ColoredBraid b = inv_braid.load();
      LaurentPoly value;
      std::string variable = "v";
      if (method == "rt") {
        value = invariant::rt_invariant(
            b, normalize == "ambient" ? invariant::Normalization::ambient : invariant::Normalization::none);
      } else {
        if (normalize != "none") throw UsageError("--normalize applies only to --method rt");
        require_fundamental(b, "--method " + method);
        if (method == "bracket") {
          value = invariant::kauffman_bracket(b.word);
          variable = "x";
        } else {
          value = invariant::cs_invariant_fundamental(b.word);
        }
      }
      if (inv_output == "json") {
        const json doc = {{"braid", io::braid_to_json(b)}, {"method", method},
                          {"normalization", normalize},      {"variable", variable},
                          {"value", io::poly_to_json(value)}, {"text", value.to_string(variable)}};
        out << doc.dump(2) << "\n";
      } else {
        out << value.to_string(variable) << "\n";
      }
      return ok;
    }

    if (*rm) {
      std::vector<Spin> spins;
      std::stringstream list(rm_spins);
      for (std::string item; std::getline(list, item, ',');) spins.push_back(Spin::parse(item));
      if (spins.size() != 2) throw UsageError("--spins needs exactly two spins");
      rmatrix::Variant v = rmatrix::Variant::plain;
      if (variant == "inverse") v = rmatrix::Variant::inverse;
      if (variant == "braided") v = rmatrix::Variant::braided;
      if (variant == "braided-inverse") v = rmatrix::Variant::braided_inverse;
      if (variant == "opposite") v = rmatrix::Variant::opposite;
      const Operator op = rmatrix::get({spins[0], spins[1], v});
      if (rm_output == "json") {
        out << io::operator_to_json(op).dump(2) << "\n";
      } else {
        out << describe(op);
      }
      return ok;
    }

    if (*skein) {
      const ColoredBraid b = skein_braid.load();
      require_fundamental(b, "verify skein");
      return emit_report(invariant::verify_skein(b.word, generator), ver_output, out);
    }
    if (*framing) {
      const ColoredBraid b = framing_braid.load();
      if (strand > b.colors.size()) throw UsageError("--strand out of range");
      return emit_report(invariant::verify_framing(b, strand - 1), ver_output, out);
    }
    if (*recursion) {
      return emit_report(invariant::verify_recursion(recursion_braid.load(), component - 1), ver_output, out);
    }
    if (*factorization) {
      const BraidInput other{other_braid, other_colors};
      return emit_report(invariant::verify_factorization(fact_a.load(), other.load()), ver_output, out);
    }
    if (*markov) {
      const ColoredBraid b = markov_braid.load();
      const braid::BraidWord g = braid::parse("n=" + std::to_string(b.n_strands()) + "; " + conjugator);
      return emit_report(invariant::verify_markov(b, g.letters), ver_output, out);
    }
    if (*awcmd) {
      const aw::TripleShape s = aw::TripleShape::parse(aw_spins);
      return emit_report(aw::run_suite(*aw::parse_suite(suite), s), ver_output, out);
    }
  } catch (const UsageError& e) {
    err << "qlink: " << e.what() << "\n";
    return usage;
  } catch (const InternalError& e) {
    err << "qlink: internal check failed: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    err << "qlink: unexpected error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}

}  // namespace qlink::cli
