#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgh/distance.hpp"
#include "sgh/edc.hpp"
#include "sgh/hom.hpp"
#include "sgh/io.hpp"
#include "sgh/parallel.hpp"
#include "sgh/tube.hpp"
#include "sgh/weighted_graph.hpp"

namespace {

void emit(const sgh::json& j) { std::cout << j.dump(2) << "\n"; }

sgh::SignClass class_from_string(const std::string& s) {
  if (s == "C01" || s == "c01") return sgh::SignClass::C01;
  if (s == "C10" || s == "c10") return sgh::SignClass::C10;
  if (s == "C11" || s == "c11") return sgh::SignClass::C11;
  if (s == "mixed" || s == "Mixed") return sgh::SignClass::Mixed;
  throw std::runtime_error("unknown class \"" + s + "\", expected c01, c10, c11 or mixed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed multigraph walk girths, double covers and twisted tube bounds"};
  app.require_subcommand(1);

  int threads = 0;
  bool quiet = false;
  app.add_option("--threads", threads, "cap on worker threads (default: all)");
  app.add_flag("-q,--quiet", quiet, "suppress informational notes on stderr");

  auto* c_girths = app.add_subcommand("girths", "walk girths of a signed graph");
  std::string girths_file;
  bool girths_class = false;
  c_girths->add_option("file,--in", girths_file, "signed graph JSON")->required();
  c_girths->add_flag("--class", girths_class, "append the sign class");

  auto* c_switch = app.add_subcommand("switch", "switch a graph at a vertex set");
  std::string switch_file;
  std::vector<int> switch_set;
  c_switch->add_option("file,--in", switch_file, "signed graph JSON")->required();
  c_switch->add_option("-s,--set", switch_set, "vertices to switch at")->delimiter(',');

  auto* c_eqv = app.add_subcommand("eqv", "decide switching equivalence");
  std::string eqv_a, eqv_b;
  c_eqv->add_option("first", eqv_a)->required();
  c_eqv->add_option("second", eqv_b)->required();

  auto* c_edc = app.add_subcommand("edc", "extended double cover");
  std::string edc_file;
  bool edc_weighted = false;
  c_edc->add_option("file,--in", edc_file, "graph JSON")->required();
  c_edc->add_flag("-w,--weighted", edc_weighted, "treat the input as weighted");

  auto* c_spc = app.add_subcommand("spc", "signed projective cube");
  int spc_k = 0;
  c_spc->add_option("k", spc_k, "dimension")->required();

  auto* c_tube = app.add_subcommand("tube", "twisted tube of a girth");
  int tube_g = 0;
  bool tube_cyl = false;
  bool tube_verify = false;
  std::string tube_emit = "json";
  c_tube->add_option("g,--g", tube_g, "girth")->required();
  c_tube->add_flag("--cylinder", tube_cyl, "emit the untwisted cylinder instead");
  c_tube->add_flag("--verify", tube_verify, "build and check the tube certificate");
  c_tube->add_option("--emit", tube_emit, "output format, json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* c_wide = app.add_subcommand("wide", "test girth domination over the reference");
  std::string wide_file;
  int wide_g = 0;
  bool wide_weighted = false;
  c_wide->add_option("file,--in", wide_file, "graph JSON")->required();
  c_wide->add_option("g,--g", wide_g, "girth")->required();
  c_wide->add_flag("-w,--weighted", wide_weighted, "treat the input as weighted");

  auto* c_triples = app.add_subcommand("triples", "wide triples of a girth");
  int triples_g = 0;
  c_triples->add_option("g", triples_g, "girth")->required();

  auto* c_dist = app.add_subcommand("dist", "signed shortest-path distance");
  std::string dist_file;
  int dist_u = 0, dist_v = 0;
  c_dist->add_option("file,--in", dist_file, "signed graph JSON")->required();
  c_dist->add_option("u", dist_u)->required();
  c_dist->add_option("v", dist_v)->required();

  auto* c_certify = app.add_subcommand("certify", "search for a closed certificate");
  std::string certify_file;
  int certify_g = 0;
  c_certify->add_option("file,--in", certify_file, "signed graph JSON")->required();
  c_certify->add_option("g,--g", certify_g, "girth")->required();

  auto* c_lift = app.add_subcommand("lift", "lift a certificate to the double cover");
  std::string lift_file;
  c_lift->add_option("file,--in", lift_file, "certificate JSON")->required();

  auto* c_hom = app.add_subcommand("hom", "search for a switching homomorphism");
  std::string hom_src, hom_tgt, hom_witness;
  c_hom->add_option("source,--src", hom_src, "signed graph JSON")->required();
  c_hom->add_option("target,--tgt", hom_tgt, "signed graph JSON")->required();
  c_hom->add_option("--witness", hom_witness, "also write the witness to this file");

  auto* c_gen = app.add_subcommand("gen", "seeded random series-parallel signed graph");
  int gen_n = 0, gen_g = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_class = "mixed";
  c_gen->add_option("n,--n", gen_n, "vertices")->required();
  c_gen->add_option("seed,--seed", gen_seed, "generator seed")->required();
  c_gen->add_option("g,--g", gen_g, "required girth domination")->required();
  c_gen->add_option("--class", gen_class, "required sign class (default mixed)");

  auto* c_export = app.add_subcommand("export", "graph as DOT");
  std::string export_file;
  bool export_weighted = false;
  c_export->add_option("file,--in", export_file, "graph JSON")->required();
  c_export->add_flag("-w,--weighted", export_weighted, "treat the input as weighted");

  auto* c_verify = app.add_subcommand("verify", "check a certificate or homomorphism file");
  std::string verify_cert;
  std::vector<std::string> verify_hom;
  c_verify->add_option("--cert", verify_cert, "certificate JSON");
  c_verify->add_option("--hom", verify_hom, "source, target and homomorphism JSON")
      ->expected(3);

  CLI11_PARSE(app, argc, argv);

  try {
    if (threads == 0)
      if (const char* env = std::getenv("SGH_THREADS")) threads = std::atoi(env);
    if (threads > 0) sgh::set_max_threads(threads);

    if (*c_girths) {
      sgh::SignedGraph g = sgh::signed_graph_from_json(sgh::load_json(girths_file));
      sgh::json out = sgh::to_json(sgh::walk_girths(g));
      if (girths_class) out["class"] = sgh::to_string(sgh::classify(g));
      emit(out);
    } else if (*c_switch) {
      sgh::SignedGraph g = sgh::signed_graph_from_json(sgh::load_json(switch_file));
      std::sort(switch_set.begin(), switch_set.end());
      switch_set.erase(std::unique(switch_set.begin(), switch_set.end()), switch_set.end());
      emit(sgh::to_json(sgh::switched(g, sgh::Switching{switch_set})));
    } else if (*c_eqv) {
      sgh::SignedGraph a = sgh::signed_graph_from_json(sgh::load_json(eqv_a));
      sgh::SignedGraph b = sgh::signed_graph_from_json(sgh::load_json(eqv_b));
      auto w = sgh::switching_witness(a, b);
      sgh::json out;
      out["equivalent"] = w.has_value();
      if (w) out["switching"] = w->vertices;
      emit(out);
      if (!w) return 1;
    } else if (*c_edc) {
      sgh::json in = sgh::load_json(edc_file);
      if (edc_weighted)
        emit(sgh::to_json(sgh::extended_double_cover(sgh::weighted_graph_from_json(in))));
      else
        emit(sgh::to_json(sgh::extended_double_cover(sgh::signed_graph_from_json(in))));
    } else if (*c_spc) {
      emit(sgh::to_json(sgh::signed_projective_cube(spc_k)));
    } else if (*c_tube) {
      if (tube_verify) {
        sgh::Certificate cert = sgh::tube_certificate(tube_g);
        sgh::json out;
        out["g"] = cert.girth;
        out["order"] = cert.base.order();
        out["dist_edges"] = cert.dist_graph.edges().size();
        out["triangles"] = cert.triangles.size();
        out["valid"] = true;
        emit(out);
      } else {
        sgh::SignedGraph g = tube_cyl ? sgh::cylinder_graph(tube_g) : sgh::twisted_tube(tube_g);
        if (tube_emit == "dot")
          std::cout << sgh::to_dot(g);
        else
          emit(sgh::to_json(g));
      }
    } else if (*c_wide) {
      sgh::json in = sgh::load_json(wide_file);
      sgh::json out;
      bool wide;
      if (wide_weighted) {
        sgh::WeightedSignedGraph g = sgh::weighted_graph_from_json(in);
        wide = sgh::is_g_wide(g, wide_g);
        out["girths"] = sgh::to_json(sgh::weighted_walk_girths(g));
      } else {
        sgh::SignedGraph g = sgh::signed_graph_from_json(in);
        wide = sgh::is_g_wide(g, wide_g);
        out["girths"] = sgh::to_json(sgh::walk_girths(g));
      }
      out["wide"] = wide;
      emit(out);
      if (!wide) return 1;
    } else if (*c_triples) {
      sgh::json out;
      out["g"] = triples_g;
      sgh::json list = sgh::json::array();
      for (const sgh::Triple& t : sgh::wide_triples(triples_g))
        list.push_back(sgh::json::array({t.p, t.q, t.r}));
      out["triples"] = std::move(list);
      emit(out);
    } else if (*c_dist) {
      sgh::SignedGraph g = sgh::signed_graph_from_json(sgh::load_json(dist_file));
      sgh::json out;
      out["u"] = dist_u;
      out["v"] = dist_v;
      out["ad"] = sgh::algebraic_distance(g, dist_u, dist_v);
      emit(out);
    } else if (*c_certify) {
      sgh::SignedGraph g = sgh::signed_graph_from_json(sgh::load_json(certify_file));
      auto cert = sgh::certify_sp_complete(g, certify_g);
      if (!cert) {
        sgh::json out;
        out["certificate"] = nullptr;
        emit(out);
        if (!quiet) std::cerr << "no certificate survives pruning\n";
        return 1;
      }
      emit(sgh::to_json(*cert));
    } else if (*c_lift) {
      sgh::Certificate c = sgh::certificate_from_json(sgh::load_json(lift_file));
      emit(sgh::to_json(sgh::lift_certificate(c)));
    } else if (*c_hom) {
      sgh::SignedGraph src = sgh::signed_graph_from_json(sgh::load_json(hom_src));
      sgh::SignedGraph tgt = sgh::signed_graph_from_json(sgh::load_json(hom_tgt));
      std::optional<sgh::Homomorphism> h;
      if (sgh::passes_girth_filter(src, tgt)) h = sgh::find_homomorphism(src, tgt);
      else if (!quiet) std::cerr << "girth filter rules the map out\n";
      sgh::json out;
      out["homomorphism"] = h ? sgh::to_json(*h) : sgh::json(nullptr);
      emit(out);
      if (h && !hom_witness.empty()) sgh::save_text(hom_witness, sgh::to_json(*h).dump(2) + "\n");
      if (!h) return 1;
    } else if (*c_gen) {
      emit(sgh::to_json(
          sgh::random_sp_signed_graph(gen_n, gen_seed, gen_g, class_from_string(gen_class))));
    } else if (*c_export) {
      sgh::json in = sgh::load_json(export_file);
      if (export_weighted)
        std::cout << sgh::to_dot(sgh::weighted_graph_from_json(in));
      else
        std::cout << sgh::to_dot(sgh::signed_graph_from_json(in));
    } else if (*c_verify) {
      if (verify_cert.empty() == verify_hom.empty())
        throw std::runtime_error("verify needs exactly one of --cert or --hom");
      sgh::json out;
      bool ok;
      if (!verify_cert.empty()) {
        sgh::Certificate c = sgh::certificate_from_json(sgh::load_json(verify_cert));
        std::vector<std::string> problems = sgh::certificate_problems(c);
        ok = problems.empty();
        out["valid"] = ok;
        if (!ok) out["problems"] = problems;
      } else {
        sgh::SignedGraph src = sgh::signed_graph_from_json(sgh::load_json(verify_hom[0]));
        sgh::SignedGraph tgt = sgh::signed_graph_from_json(sgh::load_json(verify_hom[1]));
        sgh::Homomorphism h = sgh::homomorphism_from_json(sgh::load_json(verify_hom[2]));
        ok = sgh::verify_homomorphism(h, src, tgt);
        out["valid"] = ok;
      }
      emit(out);
      if (!ok) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
