// Command-line front end: solving, pattern checking, kernelizing, gadget
// compilation and gadget verification. Prints exactly one JSON document on
// stdout; diagnostics go to stderr.
//
// Exit codes: 0 computed (sat or unsat), 64 usage, 65 bad input data or
// precondition violation, 70 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "olc/olc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw olc::InputError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw olc::InputError("cannot write file: " + path);
  out << content;
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw olc::InputError(path + ": " + e.what());
  }
}

void emit(const olc::Json& doc) { std::cout << doc.dump() << "\n"; }

olc::Instance load_instance(const std::string& path) {
  return olc::instance_from_json(parse_json_file(path));
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (cur.empty()) continue;
    out.push_back(std::stoi(cur));
  }
  return out;
}

olc::rainbow::TripleSystem parse_triples(const std::string& text) {
  olc::rainbow::TripleSystem out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) continue;
    auto parts = parse_int_list(cur, '-');
    if (parts.size() != 3) throw olc::InputError("triple must have 3 elements: " + cur);
    out.push_back({parts[0], parts[1], parts[2]});
  }
  return out;
}

struct Options {
  std::string algo = "auto";
  int k = 4;
  int ell = 1;
  std::string sub3 = "oracle";
  std::string file;

  std::string pattern_name;

  std::string out_path;
  std::string map_path;  // --layout / --decode
  std::string coloring_path;

  std::string kind;  // verify-gadget
  int c = 1;
  int n = 1;
  int j = 1;
  int kk = 2;
  std::string sigma;
  std::string pairs;
  std::string triples;
  int threads = 1;

  std::string instance_path;
};

int run_solve(const Options& o) {
  const auto inst = load_instance(o.file);
  std::optional<olc::Coloring> col;
  std::string route = o.algo;
  if (o.algo == "auto") {
    auto res = olc::solve_auto(inst);
    col = res.coloring;
    route = res.route;
  } else if (o.algo == "oracle") {
    col = olc::solve_exact(inst);
  } else if (o.algo == "two-list") {
    col = olc::solve_two_lists(inst);
  } else if (o.algo == "chordal") {
    col = olc::solve_fork_free(inst);
  } else if (o.algo == "clique-matching") {
    col = olc::solve_clique_unbounded(inst);
  } else if (o.algo == "single-edge") {
    col = olc::solve_single_edge_free(inst, o.k, o.ell);
  } else if (o.algo == "ljj4") {
    if (o.sub3 != "oracle") throw olc::InputError("unsupported --sub3 value: " + o.sub3);
    col = olc::solve4_padded_fork_free(inst, o.ell);
  } else {
    throw olc::InputError("unknown algorithm: " + o.algo);
  }
  olc::Json doc = olc::coloring_to_json(col);
  if (o.algo == "auto") doc["algo"] = route;
  emit(doc);
  return kExitOk;
}

int run_pattern(const Options& o) {
  const auto inst = load_instance(o.file);
  const auto p = olc::pattern_from_name(o.pattern_name);
  olc::Json doc;
  if (auto w = olc::find_induced(inst.graph, p)) {
    doc["free"] = false;
    doc["witness"] = *w;
  } else {
    doc["free"] = true;
  }
  emit(doc);
  return kExitOk;
}

int run_kernelize(const Options& o) {
  const auto inst = load_instance(o.file);
  const auto red = olc::kernelize(inst);
  olc::Json doc;
  if (red.no) {
    doc["status"] = "no";
  } else {
    doc["status"] = "reduced";
    doc["instance"] = olc::instance_to_json(red.instance);
    olc::Json trace = olc::Json::array();
    for (const auto& [v, c] : red.trace) trace.push_back(olc::Json::array({v, c}));
    doc["trace"] = trace;
    doc["index_map"] = red.index_map;
    if (!o.out_path.empty())
      write_file(o.out_path, olc::Json(doc["instance"]).dump() + "\n");
    if (!o.map_path.empty()) {
      olc::Json sidecar;
      sidecar["status"] = "reduced";
      sidecar["trace"] = trace;
      sidecar["index_map"] = red.index_map;
      write_file(o.map_path, sidecar.dump() + "\n");
    }
  }
  emit(doc);
  return kExitOk;
}

int run_gadget_jj1(const Options& o) {
  const auto f = olc::parse_dimacs_cnf(read_file(o.file));
  auto [inst, layout] = olc::jj1::build_instance(f);
  const olc::Json doc = olc::instance_to_json(inst);
  if (!o.out_path.empty()) write_file(o.out_path, doc.dump() + "\n");
  if (!o.map_path.empty()) write_file(o.map_path, olc::jj1::layout_to_json(layout).dump() + "\n");
  emit(doc);
  return kExitOk;
}

int run_gadget_rainbow(const Options& o) {
  const auto f = olc::parse_nae(read_file(o.file));
  const auto red = olc::rainbow::reduce_nae3sat(f);
  const olc::Json doc = olc::instance_to_json(red.instance);
  if (!o.out_path.empty()) write_file(o.out_path, doc.dump() + "\n");
  if (!o.map_path.empty()) {
    olc::Json map;
    map["kind"] = "nae";
    map["num_vars"] = red.num_vars;
    map["inputs"] = red.inputs;
    write_file(o.map_path, map.dump() + "\n");
  }
  emit(doc);
  return kExitOk;
}

int run_decode(const Options& o) {
  const auto map = parse_json_file(o.map_path);
  const auto col = olc::coloring_from_json(parse_json_file(o.coloring_path));
  if (!col) throw olc::InputError("decode: coloring document is unsat");
  const std::string kind = map.value("kind", std::string{});
  olc::Assignment a;
  int num_vars = 0;
  if (kind == "jj1") {
    const auto layout = olc::jj1::layout_from_json(map);
    a = olc::jj1::decode_assignment(layout, *col);
    num_vars = layout.num_vars;
  } else if (kind == "nae") {
    num_vars = map.at("num_vars").get<int>();
    const auto inputs = map.at("inputs").get<std::vector<olc::Vertex>>();
    if (static_cast<int>(inputs.size()) != num_vars)
      throw olc::InputError("decode: inputs array size mismatch");
    a.resize(num_vars);
    for (int i = 0; i < num_vars; ++i) {
      const olc::Color c = col->at(inputs[i]);
      if (c != 1 && c != 2) throw olc::InputError("decode: input vertex colored outside {1,2}");
      a[i] = c == 1;
    }
  } else {
    throw olc::InputError("decode: unknown layout kind: " + kind);
  }
  olc::Json doc;
  doc["num_vars"] = num_vars;
  olc::Json arr = olc::Json::array();
  for (bool b : a) arr.push_back(b);
  doc["assignment"] = arr;
  emit(doc);
  return kExitOk;
}

int run_verify(const Options& o) {
  const auto inst = load_instance(o.instance_path);
  const auto col = olc::coloring_from_json(parse_json_file(o.coloring_path));
  if (!col) throw olc::InputError("verify: coloring document is unsat");
  olc::Json doc;
  doc["proper"] = olc::is_proper(inst, *col);
  emit(doc);
  return kExitOk;
}

int run_verify_gadget(const Options& o) {
  using namespace olc::rainbow;
  Link link;
  LinkSemanticsSpec spec;
  olc::Json params;
  if (o.kind == "rotation") {
    link = rotation_gadget(o.n, o.j, o.kk);
    std::vector<int> sigma(o.n);
    for (int i = 1; i <= o.n; ++i) sigma[i - 1] = rotation_apply(o.n, o.j, o.kk, i);
    spec = permutation_spec(sigma);
    params = {{"ell", o.n}, {"j", o.j}, {"k", o.kk}};
  } else if (o.kind == "permutation") {
    const auto sigma = parse_int_list(o.sigma, ',');
    link = permutation_gadget(sigma);
    spec = permutation_spec(sigma);
    params = {{"sigma", sigma}};
  } else if (o.kind == "indicator") {
    const auto pairs = parse_int_list(o.pairs, ',');
    link = indicator_gadget(o.c, o.n, pairs);
    spec = indicator_spec(o.c, o.n, pairs);
    params = {{"c", o.c}, {"n", o.n}, {"pairs", pairs}};
  } else if (o.kind == "notcc") {
    const auto pairs = parse_int_list(o.pairs, ',');
    link = notcc_gadget(o.c, o.n, pairs);
    spec = notcc_spec(o.c, o.n, pairs);
    params = {{"c", o.c}, {"n", o.n}, {"pairs", pairs}};
  } else if (o.kind == "notccc") {
    const auto triples = parse_triples(o.triples);
    link = notccc_gadget(o.c, o.n, triples);
    spec = notccc_spec(o.c, o.n, triples);
    params = {{"c", o.c}, {"n", o.n}, {"triples", o.triples}};
  } else if (o.kind == "nae") {
    const auto triples = parse_triples(o.triples);
    link = nae_gadget(o.n, triples);
    spec = nae_spec(o.n, triples);
    params = {{"n", o.n}, {"triples", o.triples}};
  } else {
    throw olc::InputError("unknown gadget kind: " + o.kind);
  }
  const auto report = verify_link_semantics(link, spec, o.threads);
  olc::Json doc;
  doc["kind"] = o.kind;
  doc["params"] = params;
  doc["vertices"] = link.graph.size();
  doc["inputs_checked"] = report.inputs_checked;
  doc["output_checks"] = report.output_checks;
  doc["pass"] = report.pass();
  olc::Json mism = olc::Json::array();
  for (const auto& m : report.mismatches) {
    olc::Json e;
    e["input"] = m.input;
    if (m.output) e["output"] = *m.output;
    e["expected"] = m.expected;
    e["actual"] = m.actual;
    mism.push_back(e);
  }
  doc["mismatches"] = mism;
  emit(doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"list coloring of ordered graphs with forbidden patterns"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "solve a list-coloring instance");
  solve->add_option("--algo", o.algo,
                    "auto|oracle|two-list|chordal|clique-matching|single-edge|ljj4")
      ->default_str("auto");
  solve->add_option("--k", o.k, "number of colors (single-edge)");
  solve->add_option("--ell", o.ell, "pattern pad parameter");
  solve->add_option("--sub3", o.sub3, "3-coloring subsolver for ljj4 (oracle)");
  solve->add_option("file", o.file, "instance JSON")->required();

  auto* pattern = app.add_subcommand("pattern", "search for an induced pattern");
  pattern->add_option("--name", o.pattern_name, "pattern name")->required();
  pattern->add_option("file", o.file, "instance JSON")->required();

  auto* kern = app.add_subcommand("kernelize", "apply the reduction rules exhaustively");
  kern->add_option("file", o.file, "instance JSON")->required();
  kern->add_option("-o,--out", o.out_path, "write the reduced instance JSON here");
  kern->add_option("--trace", o.map_path, "write the trace sidecar here");

  auto* gadget = app.add_subcommand("gadget", "compile a formula into a hardness instance");
  gadget->require_subcommand(1);
  auto* gjj1 = gadget->add_subcommand("jj1", "3-CNF to fork_tail-free List 4-Coloring");
  gjj1->add_option("formula", o.file, "DIMACS CNF file")->required();
  gjj1->add_option("-o,--out", o.out_path, "write the instance JSON here");
  gjj1->add_option("--layout,--decode", o.map_path, "write the layout sidecar here");
  auto* grb = gadget->add_subcommand("rainbow", "NAE-3-SAT to nested_pair-free List 4-Coloring");
  grb->add_option("formula", o.file, "p nae formula file")->required();
  grb->add_option("-o,--out", o.out_path, "write the instance JSON here");
  grb->add_option("--decode,--layout", o.map_path, "write the decode map here");

  auto* dec = app.add_subcommand("decode", "decode a coloring into an assignment");
  dec->add_option("--layout", o.map_path, "layout/decode map JSON")->required();
  dec->add_option("--coloring", o.coloring_path, "coloring JSON")->required();

  auto* ver = app.add_subcommand("verify", "check a coloring against an instance");
  ver->add_option("instance", o.instance_path, "instance JSON")->required();
  ver->add_option("coloring", o.coloring_path, "coloring JSON")->required();

  auto* vg = app.add_subcommand("verify-gadget", "verify gadget semantics by enumeration");
  vg->add_option("--kind", o.kind, "rotation|permutation|indicator|notcc|notccc|nae")
      ->required();
  vg->add_option("--c", o.c, "color (1 or 2)");
  vg->add_option("--n", o.n, "arity / ell");
  vg->add_option("--j", o.j, "rotation start");
  vg->add_option("--k", o.kk, "rotation end");
  vg->add_option("--sigma", o.sigma, "permutation images, comma-separated");
  vg->add_option("--pairs", o.pairs, "pair lower elements, comma-separated");
  vg->add_option("--triples", o.triples, "triples like 1-2-3,4-5-6");
  vg->add_option("--threads", o.threads, "parallel input pinnings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(o);
    if (app.got_subcommand(pattern)) return run_pattern(o);
    if (app.got_subcommand(kern)) return run_kernelize(o);
    if (app.got_subcommand(gadget)) {
      if (gadget->got_subcommand(gjj1)) return run_gadget_jj1(o);
      return run_gadget_rainbow(o);
    }
    if (app.got_subcommand(dec)) return run_decode(o);
    if (app.got_subcommand(ver)) return run_verify(o);
    if (app.got_subcommand(vg)) return run_verify_gadget(o);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const olc::PatternError& e) {
    olc::Json doc;
    doc["error"] = e.what();
    doc["witness"] = e.witness;
    emit(doc);
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const olc::InputError& e) {
    olc::Json doc;
    doc["error"] = e.what();
    emit(doc);
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const olc::PreconditionError& e) {
    olc::Json doc;
    doc["error"] = e.what();
    emit(doc);
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    olc::Json doc;
    doc["error"] = e.what();
    emit(doc);
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
