#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kbar/enumerate.hpp"
#include "kbar/polytopes.hpp"
#include "kbar/poset.hpp"
#include "kbar/render.hpp"
#include "kbar/serialize.hpp"
#include "kbar/tree.hpp"
#include "kbar/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

kbar::EnumOptions options_from_env(long long cap_flag) {
  kbar::EnumOptions opts;
  if (const char* env = std::getenv("KBAR_CAP")) opts.cap = std::atoll(env);
  if (cap_flag > 0) opts.cap = cap_flag;
  return opts;
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    os << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    os << text;
  }
}

json factor_json(const kbar::ModuliFactor& f) {
  return json{{"name", f.str()}, {"dim", f.dimension()}};
}

json stratum_json(const kbar::Stratum& s) {
  json fs = json::array();
  for (const auto& f : s.factors) fs.push_back(factor_json(f));
  return json{{"key", s.key},
              {"codim", s.codim},
              {"dim", s.dim},
              {"factors", fs},
              {"tree", kbar::tree_to_json(s.canonical)}};
}

json poset_json(const kbar::FacePoset& p) {
  json els = json::array();
  for (const auto& e : p.elements)
    els.push_back(json{{"rank", e.rank}, {"label", e.label}});
  json cov = json::array();
  for (auto [a, b] : p.covers) cov.push_back(json::array({a, b}));
  return json{{"elements", els}, {"covers", cov}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Poset specifier for `iso`: assoc:N | cyclo:N | face:N,M | closure:N,M.
kbar::FacePoset parse_poset_spec(const std::string& spec,
                                 const kbar::EnumOptions& opts) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw kbar::Error(kbar::Errc::Usage, "poset spec needs ':' (" + spec + ")");
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  auto comma = args.find(',');
  if (kind == "assoc") return kbar::associahedron_poset(std::stoi(args));
  if (kind == "cyclo")
    return kbar::cyclohedron_poset(std::stoi(args), opts).poset;
  if (comma == std::string::npos)
    throw kbar::Error(kbar::Errc::Usage, "spec " + kind + " needs N,M");
  int n = std::stoi(args.substr(0, comma));
  int m = std::stoi(args.substr(comma + 1));
  if (kind == "face") return kbar::face_poset(n, m, opts);
  if (kind == "closure") return kbar::chamber_closure_poset(n, m, opts).poset;
  throw kbar::Error(kbar::Errc::Usage, "unknown poset spec kind " + kind);
}

json error_json(const kbar::Error& e) {
  return json{{"schema_version", kSchemaVersion},
              {"error", kbar::errc_name(e.code)},
              {"message", e.what()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of the moduli space Kbar(n,m) of punctured disks"};
  app.require_subcommand(1);

  int n = 0, m = 0, codim_flag = -1, poly_n = 0;
  long long cap_flag = 0;
  std::string format = "json", out_path, tree_path, left_spec, right_spec;
  std::string chamber_key;

  app.add_option("--cap", cap_flag,
                 "max raw trees during enumeration (also env KBAR_CAP)");

  auto add_nm = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "interior particles")->required();
    cmd->add_option("--m", m, "boundary particles")->required();
    cmd->add_option("--output", out_path, "output file (default stdout)");
  };

  auto* c_strata = app.add_subcommand("strata", "enumerate strata of one codim");
  add_nm(c_strata);
  c_strata->add_option("--codim", codim_flag, "codimension")->required();

  auto* c_fvec = app.add_subcommand("fvector", "strata counts per codim");
  add_nm(c_fvec);

  auto* c_chambers = app.add_subcommand("chambers", "codim-0 count, (m-1)!");
  add_nm(c_chambers);

  auto* c_div = app.add_subcommand("divisors", "codim-1 divisor census");
  add_nm(c_div);
  c_div->add_option("--format", format, "json|csv");

  auto* c_bset = app.add_subcommand("building-set", "minimal building set");
  add_nm(c_bset);
  c_bset->add_option("--format", format, "json|csv");

  auto* c_poset = app.add_subcommand("poset", "face poset of all strata");
  add_nm(c_poset);
  c_poset->add_option("--format", format, "json|dot|text");

  auto* c_closure = app.add_subcommand("closure", "chamber closure poset");
  add_nm(c_closure);
  c_closure->add_option("--chamber", chamber_key,
                        "chamber key (default: first chamber)");
  c_closure->add_option("--format", format, "json|dot|text");

  auto* c_adj = app.add_subcommand("adjacency", "chamber adjacency graph");
  add_nm(c_adj);

  auto* c_euler = app.add_subcommand("euler", "Euler characteristic (n <= 1)");
  add_nm(c_euler);

  auto* c_assoc = app.add_subcommand("assoc", "associahedron face poset");
  c_assoc->add_option("--n", poly_n, "letters")->required();
  c_assoc->add_option("--format", format, "json|dot|text");
  c_assoc->add_option("--output", out_path, "output file");

  auto* c_cyclo = app.add_subcommand("cyclo", "cyclohedron face poset");
  c_cyclo->add_option("--n", poly_n, "boundary particles")->required();
  c_cyclo->add_option("--format", format, "json|dot|text");
  c_cyclo->add_option("--output", out_path, "output file");

  auto* c_iso = app.add_subcommand("iso", "graded poset isomorphism test");
  c_iso->add_option("--left", left_spec, "assoc:N|cyclo:N|face:N,M|closure:N,M")
      ->required();
  c_iso->add_option("--right", right_spec, "same syntax")->required();
  c_iso->add_option("--output", out_path, "output file");

  auto* c_render = app.add_subcommand("render", "draw a tree file");
  c_render->add_option("--tree", tree_path, "tree JSON file")->required();
  c_render->add_option("--format", format, "svg|dual-dot|dual-json");
  c_render->add_option("--output", out_path, "output file");

  auto* c_verify = app.add_subcommand("verify", "run the verification suite");
  c_verify->add_option("--output", out_path, "output file");

  CLI11_PARSE(app, argc, argv);
  kbar::EnumOptions opts = options_from_env(cap_flag);

  try {
    if (c_strata->parsed()) {
      auto strata = kbar::enumerate_strata(n, m, codim_flag, opts);
      json arr = json::array();
      for (const auto& s : strata) arr.push_back(stratum_json(s));
      emit(json{{"schema_version", kSchemaVersion},
                {"n", n},
                {"m", m},
                {"codim", codim_flag},
                {"count", strata.size()},
                {"strata", arr}},
           out_path);
    } else if (c_fvec->parsed()) {
      emit(json{{"schema_version", kSchemaVersion},
                {"n", n},
                {"m", m},
                {"f_vector", kbar::f_vector(n, m, opts)}},
           out_path);
    } else if (c_chambers->parsed()) {
      emit(json{{"schema_version", kSchemaVersion},
                {"n", n},
                {"m", m},
                {"chambers", kbar::chambers(n, m, opts)}},
           out_path);
    } else if (c_div->parsed()) {
      kbar::DivisorCensus c = kbar::divisor_census(n, m, opts);
      if (format == "csv") {
        std::string text = "class,strata,outer,inner\n";
        for (const auto& d : c.classes)
          text += csv_escape(d.str()) + "," + std::to_string(d.stratum_count) +
                  "," + d.outer.str() + "," + d.inner.str() + "\n";
        emit_text(text, out_path);
      } else {
        json arr = json::array();
        for (const auto& d : c.classes)
          arr.push_back(json{{"class", d.str()},
                             {"strata", d.stratum_count},
                             {"outer", factor_json(d.outer)},
                             {"inner", factor_json(d.inner)}});
        emit(json{{"schema_version", kSchemaVersion},
                  {"n", n},
                  {"m", m},
                  {"interior", c.interior_total},
                  {"boundary", c.boundary_total},
                  {"mixed", c.mixed_total},
                  {"closed_form_checked", c.closed_form_checked},
                  {"classes", arr}},
             out_path);
      }
    } else if (c_bset->parsed()) {
      auto bset = kbar::building_set(n, m);
      if (format == "csv") {
        std::string text = "element,grading\n";
        for (const auto& e : bset)
          text += csv_escape(e.str()) + "," + std::to_string(e.grading) + "\n";
        emit_text(text, out_path);
      } else {
        json arr = json::array();
        for (const auto& e : bset)
          arr.push_back(json{{"element", e.str()}, {"grading", e.grading}});
        emit(json{{"schema_version", kSchemaVersion},
                  {"n", n},
                  {"m", m},
                  {"count", bset.size()},
                  {"elements", arr}},
             out_path);
      }
    } else if (c_poset->parsed()) {
      kbar::FacePoset p = kbar::face_poset(n, m, opts);
      if (format == "dot")
        emit_text(kbar::to_dot(p), out_path);
      else if (format == "text")
        emit_text(kbar::to_text(p), out_path);
      else
        emit(json{{"schema_version", kSchemaVersion}, {"poset", poset_json(p)}},
             out_path);
    } else if (c_closure->parsed()) {
      kbar::ClosurePoset cp;
      if (chamber_key.empty()) {
        cp = kbar::chamber_closure_poset(n, m, opts);
      } else {
        bool found = false;
        for (const auto& ch : kbar::enumerate_strata(n, m, 0, opts))
          if (ch.key == chamber_key) {
            cp = kbar::chamber_closure_poset(n, m, ch, opts);
            found = true;
            break;
          }
        if (!found)
          throw kbar::Error(kbar::Errc::NotAChamber,
                            "no chamber with key " + chamber_key);
      }
      if (format == "dot")
        emit_text(kbar::to_dot(cp.poset), out_path);
      else if (format == "text")
        emit_text(kbar::to_text(cp.poset), out_path);
      else
        emit(json{{"schema_version", kSchemaVersion},
                  {"chamber", cp.chamber_key},
                  {"self_glued", cp.self_glued},
                  {"stratum_keys", cp.stratum_keys},
                  {"poset", poset_json(cp.poset)}},
             out_path);
    } else if (c_adj->parsed()) {
      kbar::AdjacencyResult a = kbar::chamber_adjacency(n, m, opts);
      json chs = json::array();
      for (const auto& c : a.chambers) chs.push_back(c.key);
      json edges = json::array();
      for (auto [i, j] : a.edges) edges.push_back(json::array({i, j}));
      emit(json{{"schema_version", kSchemaVersion},
                {"chambers", chs},
                {"edges", edges},
                {"components", a.components}},
           out_path);
    } else if (c_euler->parsed()) {
      emit(json{{"schema_version", kSchemaVersion},
                {"n", n},
                {"m", m},
                {"euler_characteristic", kbar::euler_characteristic(n, m, opts)}},
           out_path);
    } else if (c_assoc->parsed()) {
      kbar::FacePoset p = kbar::associahedron_poset(poly_n);
      if (format == "dot")
        emit_text(kbar::to_dot(p), out_path);
      else if (format == "text")
        emit_text(kbar::to_text(p), out_path);
      else
        emit(json{{"schema_version", kSchemaVersion},
                  {"f_vector", kbar::poset_f_vector(p)},
                  {"poset", poset_json(p)}},
             out_path);
    } else if (c_cyclo->parsed()) {
      kbar::ClosurePoset cp = kbar::cyclohedron_poset(poly_n, opts);
      if (format == "dot")
        emit_text(kbar::to_dot(cp.poset), out_path);
      else if (format == "text")
        emit_text(kbar::to_text(cp.poset), out_path);
      else
        emit(json{{"schema_version", kSchemaVersion},
                  {"self_glued", cp.self_glued},
                  {"f_vector", kbar::poset_f_vector(cp.poset)},
                  {"poset", poset_json(cp.poset)}},
             out_path);
    } else if (c_iso->parsed()) {
      kbar::FacePoset lhs = parse_poset_spec(left_spec, opts);
      kbar::FacePoset rhs = parse_poset_spec(right_spec, opts);
      bool iso = kbar::poset_isomorphic(lhs, rhs);
      emit(json{{"schema_version", kSchemaVersion},
                {"left", left_spec},
                {"right", right_spec},
                {"isomorphic", iso}},
           out_path);
      return iso ? 0 : 1;
    } else if (c_render->parsed()) {
      std::ifstream is(tree_path);
      if (!is)
        throw kbar::Error(kbar::Errc::ParseError, "cannot open " + tree_path);
      std::string text((std::istreambuf_iterator<char>(is)),
                       std::istreambuf_iterator<char>());
      kbar::BubbleTree t = kbar::tree_from_string(text);
      kbar::require_valid(t);
      if (format == "dual-dot")
        emit_text(kbar::render_dual_dot(t), out_path);
      else if (format == "dual-json")
        emit(kbar::dual_to_json(kbar::dual_tree(t)), out_path);
      else
        emit_text(kbar::render_disk_svg(t), out_path);
    } else if (c_verify->parsed()) {
      auto checks = kbar::run_verification();
      bool all = true;
      std::string text;
      for (const auto& c : checks) {
        all = all && c.pass;
        text += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name +
                ": expected " + c.expected + ", got " + c.actual + "\n";
      }
      text += all ? "all checks passed\n" : "SOME CHECKS FAILED\n";
      emit_text(text, out_path);
      return all ? 0 : 1;
    }
  } catch (const kbar::Error& e) {
    std::cerr << error_json(e).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"schema_version", kSchemaVersion},
                      {"error", "Internal"},
                      {"message", e.what()}}
                     .dump(2)
              << "\n";
    return 3;
  }
  return 0;
}
