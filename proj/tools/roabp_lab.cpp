// roabp-lab: exact widths, synthesis, and the experiment harness on top of
// the roabp library. Every computation is exact; exit code 0 means success
// (and, for `exp` and `chebotarev`, that every check passed), 1 means a
// failed check, 2 means bad input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "roabp/experiments.hpp"
#include "roabp/nisan.hpp"
#include "roabp/roabp.hpp"
#include "roabp/symfun.hpp"
#include "roabp/sylvester.hpp"

namespace {

using nlohmann::json;
using namespace roabp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw roabp::DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw roabp::DomainError("cannot write '" + path + "'");
  out << data;
}

Polynomial load_poly(const std::string& path, const FieldDescriptor& field, int arity) {
  return parse_polynomial(read_file(path), field,
                          arity > 0 ? std::optional<int>(arity) : std::nullopt);
}

int parse_var(const std::string& text) {
  std::string t = text;
  if (!t.empty() && (t[0] == 'x' || t[0] == 'X')) t = t.substr(1);
  const int v = std::stoi(t);
  if (v < 1) throw roabp::ParseError("variables are 1-indexed");
  return v - 1;
}

json profile_json(const CutProfile& p) {
  return {{"order", p.order.one_based()}, {"ranks", p.ranks}, {"width", p.width}, {"size", p.size}};
}

std::string profile_csv_row(const CutProfile& p) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "\"" + join(p.order.one_based()) + "\",\"" + join(p.ranks) + "\"," +
         std::to_string(p.width) + "," + std::to_string(p.size);
}

// --out accepts a path (format from the extension) or the literal "json"/"csv"
// meaning stdout in that format.
void emit(const std::string& out, const std::string& json_text, const std::string& csv_text) {
  if (out.empty() || out == "json") {
    std::cout << json_text << "\n";
  } else if (out == "csv") {
    std::cout << csv_text;
  } else if (out.size() > 4 && out.substr(out.size() - 4) == ".csv") {
    write_file(out, csv_text);
  } else {
    write_file(out, json_text + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact roABP widths, synthesis, and experiments"};
  app.require_subcommand(1);

  std::string field_spec = "q";
  auto add_field = [&field_spec](CLI::App* sc) {
    sc->add_option("--field", field_spec, "coefficient field: q or fp:<p>")->capture_default_str();
  };

  // ---- width
  auto* width_cmd = app.add_subcommand("width", "Nisan rank profile / width per order");
  std::string width_poly, width_order = "all", width_out;
  std::uint64_t width_seed = 0;
  int width_arity = 0, width_cap = 8;
  width_cmd->add_option("--poly", width_poly, "polynomial file")->required();
  width_cmd->add_option("--order", width_order, "a,b,c | all | random:<N>")->capture_default_str();
  width_cmd->add_option("--seed", width_seed, "seed for random order sampling");
  width_cmd->add_option("--out", width_out, "output path or literal json/csv");
  width_cmd->add_option("--arity", width_arity, "ambient variable count (default: inferred)");
  width_cmd->add_option("--cap", width_cap, "exhaustive-order variable cap")->capture_default_str();

  // ---- synth
  auto* synth_cmd = app.add_subcommand("synth", "minimal-width roABP for a polynomial and order");
  std::string synth_poly, synth_order, synth_out;
  int synth_arity = 0;
  synth_cmd->add_option("--poly", synth_poly, "polynomial file")->required();
  synth_cmd->add_option("--order", synth_order, "comma-separated 1-based order")->required();
  synth_cmd->add_option("--out", synth_out, "output roABP JSON file (default stdout)");
  synth_cmd->add_option("--arity", synth_arity, "ambient variable count");

  // ---- expand
  auto* expand_cmd = app.add_subcommand("expand", "expand a serialized roABP to a polynomial");
  std::string expand_file;
  expand_cmd->add_option("--roabp", expand_file, "roABP JSON file")->required();

  // ---- esym
  auto* esym_cmd = app.add_subcommand("esym", "elementary symmetric polynomial / its tight roABP");
  int esym_n = 0, esym_d = 0;
  std::string esym_order;
  esym_cmd->add_option("--n", esym_n, "variable count")->required();
  esym_cmd->add_option("--d", esym_d, "degree")->required();
  esym_cmd->add_option("--order", esym_order, "emit the width-min(d+1,n-d+1) roABP in this order");

  // ---- decompose
  auto* dec_cmd = app.add_subcommand("decompose", "unique f with f(e_1..e_n) = input");
  std::string dec_poly;
  int dec_arity = 0;
  dec_cmd->add_option("--poly", dec_poly, "symmetric polynomial file")->required();
  dec_cmd->add_option("--arity", dec_arity, "ambient variable count");

  // ---- circulant
  auto* circ_cmd = app.add_subcommand("circulant", "circulant polynomial for (n, k)");
  int circ_n = 0, circ_k = 0;
  circ_cmd->add_option("--n", circ_n, "variable count")->required();
  circ_cmd->add_option("--k", circ_k, "root-of-unity order")->required();

  // ---- chebotarev
  auto* cheb_cmd = app.add_subcommand("chebotarev", "exhaustive DFT-minor nonsingularity scan");
  int cheb_k = 0;
  cheb_cmd->add_option("--k", cheb_k, "prime DFT size")->required();

  // ---- gadget
  auto* gadget_cmd = app.add_subcommand("gadget", "graph polynomial families");
  std::string gadget_graph, gadget_family;
  int gadget_d = 1;
  gadget_cmd->add_option("--graph", gadget_graph, "edge-list file")->required();
  gadget_cmd->add_option("--family", gadget_family, "pg | qg | quad")->required();
  gadget_cmd->add_option("--d", gadget_d, "degree parameter")->capture_default_str();

  // ---- resultant / discriminant
  auto* res_cmd = app.add_subcommand("resultant", "Res_y(f, g) via the Sylvester determinant");
  std::string res_f, res_g, res_y;
  int res_arity = 0;
  res_cmd->add_option("--f", res_f, "polynomial file")->required();
  res_cmd->add_option("--g", res_g, "polynomial file")->required();
  res_cmd->add_option("--y", res_y, "eliminated variable (x<i> or i)")->required();
  res_cmd->add_option("--arity", res_arity, "ambient variable count");

  auto* disc_cmd = app.add_subcommand("discriminant", "Disc_y(f) = Res_y(f, df/dy)");
  std::string disc_f, disc_y;
  int disc_arity = 0;
  disc_cmd->add_option("--f", disc_f, "polynomial file")->required();
  disc_cmd->add_option("--y", disc_y, "variable (x<i> or i)")->required();
  disc_cmd->add_option("--arity", disc_arity, "ambient variable count");

  // ---- exp
  auto* exp_cmd = app.add_subcommand("exp", "experiment harness with exact verdicts");
  std::string exp_name, exp_graph, exp_g_poly, exp_out;
  int exp_n = 0, exp_k = 0, exp_d = 2;
  std::uint64_t exp_p = 0, exp_seed = 0;
  bool exp_force = false;
  int exp_cut = 0;
  exp_cmd->add_option("name", exp_name,
                      "factor | esym-power | circulant | quadratic-power | discriminant")
      ->required();
  exp_cmd->add_option("--graph", exp_graph, "edge-list file (factor, quadratic-power)");
  exp_cmd->add_option("--g", exp_g_poly, "polynomial file (discriminant)");
  exp_cmd->add_option("--n", exp_n, "n (esym-power, circulant)");
  exp_cmd->add_option("--k", exp_k, "k (esym-power, circulant)");
  exp_cmd->add_option("--d", exp_d, "power / degree parameter")->capture_default_str();
  exp_cmd->add_option("--p", exp_p, "prime field order (circulant)");
  exp_cmd->add_option("--seed", exp_seed, "report seed");
  exp_cmd->add_option("--cut", exp_cut, "override the midpoint cut size");
  exp_cmd->add_flag("--force", exp_force, "lift desk-scale caps (warns in the report)");
  exp_cmd->add_option("--out", exp_out, "write the JSON report here");

  for (CLI::App* sc : {width_cmd, synth_cmd, expand_cmd, esym_cmd, dec_cmd, circ_cmd, cheb_cmd,
                       gadget_cmd, res_cmd, disc_cmd, exp_cmd}) {
    add_field(sc);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const FieldDescriptor field = FieldDescriptor::parse(field_spec);

    if (*width_cmd) {
      const Polynomial f = load_poly(width_poly, field, width_arity);
      if (width_order != "all" && width_order.rfind("random:", 0) != 0) {
        const CutProfile p = width_profile(f, VariableOrder::parse(width_order, f.arity()));
        emit(width_out, profile_json(p).dump(2),
             "order,ranks,width,size\n" + profile_csv_row(p) + "\n");
        return 0;
      }
      const OrderScan scan = OrderScan::parse(width_order, width_seed, width_cap);
      const auto profiles = scan_orders(f, scan);
      json j;
      j["profiles"] = json::array();
      std::string csv = "order,ranks,width,size\n";
      int min_width = profiles.empty() ? 0 : profiles[0].width;
      for (const auto& p : profiles) {
        j["profiles"].push_back(profile_json(p));
        csv += profile_csv_row(p) + "\n";
        if (p.width < min_width) min_width = p.width;
      }
      json min_order;
      for (const auto& p : profiles) {
        if (p.width == min_width) {
          min_order = json(p.order.one_based());
          break;
        }
      }
      j["min_width"] = min_width;
      j["argmin_order"] = min_order;
      j["exhaustive"] = scan.mode == OrderScan::Mode::All;
      emit(width_out, j.dump(2), csv);
      return 0;
    }

    if (*synth_cmd) {
      const Polynomial f = load_poly(synth_poly, field, synth_arity);
      const Roabp a = synthesize(f, VariableOrder::parse(synth_order, f.arity()));
      const std::string text = a.to_json().dump(2);
      if (synth_out.empty()) {
        std::cout << text << "\n";
      } else {
        write_file(synth_out, text + "\n");
      }
      std::cerr << "width " << a.width() << ", size " << a.size() << "\n";
      return 0;
    }

    if (*expand_cmd) {
      const Roabp a = Roabp::from_json(json::parse(read_file(expand_file)));
      std::cout << a.expand().str() << "\n";
      return 0;
    }

    if (*esym_cmd) {
      if (esym_order.empty()) {
        std::cout << esym(field, esym_n, esym_d).str() << "\n";
        return 0;
      }
      const Roabp a = esym_roabp(field, esym_n, esym_d, VariableOrder::parse(esym_order, esym_n));
      std::cout << a.to_json().dump(2) << "\n";
      std::cerr << "width " << a.width() << " = min(d+1, n-d+1)\n";
      return 0;
    }

    if (*dec_cmd) {
      const Polynomial g = load_poly(dec_poly, field, dec_arity);
      const SymDecomposition d = decompose_symmetric(g);
      std::cout << d.f.str() << "\n";
      std::cerr << "x<d> above stands for the d-th elementary symmetric coordinate\n";
      return 0;
    }

    if (*circ_cmd) {
      std::cout << circulant_poly(field, circ_n, circ_k).str() << "\n";
      return 0;
    }

    if (*cheb_cmd) {
      const DftMinorReport rep = dft_minor_check(field, cheb_k);
      json j;
      j["k"] = rep.k;
      j["omega"] = rep.omega.str();
      j["total_minors"] = rep.total;
      j["all_nonsingular"] = rep.all_nonsingular;
      j["zero_minors"] = json::array();
      for (const auto& [rows, cols] : rep.zero_minors) {
        j["zero_minors"].push_back({{"rows", rows}, {"cols", cols}});
      }
      std::cout << j.dump(2) << "\n";
      return rep.all_nonsingular ? 0 : 1;
    }

    if (*gadget_cmd) {
      const Graph g = Graph::parse_text(read_file(gadget_graph));
      Polynomial out;
      if (gadget_family == "pg") {
        out = p_g(field, g, gadget_d);
      } else if (gadget_family == "qg") {
        out = q_g_factor(field, g, gadget_d);
      } else if (gadget_family == "quad") {
        out = quadratic(field, g);
      } else {
        throw roabp::ParseError("unknown family '" + gadget_family + "' (pg | qg | quad)");
      }
      std::cout << out.str() << "\n";
      return 0;
    }

    if (*res_cmd) {
      int arity = res_arity;
      const int y = parse_var(res_y);
      if (arity == 0) {
        // both operands and y must fit one ambient arity
        const Polynomial probe_f = load_poly(res_f, field, 0);
        const Polynomial probe_g = load_poly(res_g, field, 0);
        arity = std::max({probe_f.arity(), probe_g.arity(), y + 1});
      }
      const Polynomial f = load_poly(res_f, field, arity);
      const Polynomial g = load_poly(res_g, field, arity);
      std::cout << resultant(f, g, y).str() << "\n";
      return 0;
    }

    if (*disc_cmd) {
      const int y = parse_var(disc_y);
      int arity = disc_arity;
      if (arity == 0) {
        arity = std::max(load_poly(disc_f, field, 0).arity(), y + 1);
      }
      const Polynomial f = load_poly(disc_f, field, arity);
      std::cout << discriminant(f, y).str() << "\n";
      return 0;
    }

    if (*exp_cmd) {
      ExpOptions opts;
      opts.seed = exp_seed;
      opts.force = exp_force;
      if (exp_cut > 0) opts.cut_size = exp_cut;
      json report;
      if (exp_name == "factor") {
        if (exp_graph.empty()) throw roabp::ParseError("exp factor needs --graph");
        report = exp_factor_nonclosure(field, Graph::parse_text(read_file(exp_graph)), exp_d, opts);
      } else if (exp_name == "esym-power") {
        report = exp_esym_power(field, exp_n, exp_k, exp_d, opts);
      } else if (exp_name == "circulant") {
        if (exp_p == 0) throw roabp::ParseError("exp circulant needs --p");
        report = exp_circulant(exp_n, exp_k, exp_p, opts);
      } else if (exp_name == "quadratic-power") {
        if (exp_graph.empty()) throw roabp::ParseError("exp quadratic-power needs --graph");
        report = exp_quadratic_power(field, Graph::parse_text(read_file(exp_graph)), exp_d, opts);
      } else if (exp_name == "discriminant") {
        if (exp_g_poly.empty()) throw roabp::ParseError("exp discriminant needs --g");
        report = exp_discriminant(load_poly(exp_g_poly, field, 0), exp_d, opts);
      } else {
        throw roabp::ParseError("unknown experiment '" + exp_name + "'");
      }
      std::cout << report_table(report);
      if (!exp_out.empty()) write_file(exp_out, report.dump(2) + "\n");
      return report_passed(report) ? 0 : 1;
    }
  } catch (const roabp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
