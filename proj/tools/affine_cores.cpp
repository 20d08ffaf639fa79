// affine-cores: convert between the models, project, run the property
// suites, and draw rank-2 walks.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affine_cores.hpp"

namespace ac = affine_cores;
using ac::json;

namespace {

struct Input {
  std::string payload;
  std::string in_path;
};

json read_payload(const Input& in) {
  std::string text;
  if (!in.payload.empty()) {
    text = in.payload;
  } else if (!in.in_path.empty() && in.in_path != "-") {
    std::ifstream f(in.in_path);
    if (!f) throw std::runtime_error("cannot open " + in.in_path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ac::json_error(std::string("payload is not valid JSON: ") + e.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

int rank_from(const json& j, std::optional<int> flag, const char* what) {
  if (flag) return *flag;
  if (j.is_object() && j.contains("n")) return j.at("n").get<int>();
  throw ac::json_error(std::string(what) + " needs a rank: give --n or \"n\"");
}

// Every type-C form funnels through the abacus.
ac::AbacusC read_c(const std::string& from, const json& j, std::optional<int> n) {
  if (from == "abacus") return ac::abacus_from_json(j);
  if (from == "coroot") return ac::abacus_from_coroot(ac::coroot_from_json(j));
  if (from == "window") return ac::abacus_from_window(ac::window_from_json(j));
  if (from == "word") return ac::evaluate_word(ac::word_from_json(j, n));
  return ac::abacus_from_core(ac::partition_from_json(j),
                              rank_from(j, n, "a core"));
}

json write_c(const std::string& to, const ac::AbacusC& a) {
  if (to == "abacus") return ac::to_json(a);
  if (to == "coroot") return ac::to_json(ac::coroot_from_abacus(a));
  if (to == "window") return ac::to_json(ac::window_from_abacus(a));
  if (to == "word") return ac::to_json(ac::canonical_reduced_word(a));
  return ac::to_json(ac::partition_from_abacus(a));
}

ac::AbacusA read_a(const std::string& from, const json& j, std::optional<int> n) {
  if (from == "abacus") return ac::abacus_a_from_json(j);
  if (from == "coroot") {
    const auto coords = ac::coroot_from_json(j).coords;
    return ac::AbacusA(static_cast<int>(coords.size()), coords);
  }
  if (from == "core")
    return ac::abacus_a_from_core(ac::partition_from_json(j),
                                  rank_from(j, n, "a core"));
  throw std::invalid_argument("type A supports core, abacus and coroot only");
}

json write_a(const std::string& to, const ac::AbacusA& a) {
  if (to == "abacus") return ac::to_json(a);
  if (to == "coroot") return json{{"type", "A"}, {"coords", a.levels()}};
  if (to == "core") {
    json j{{"type", "A"}, {"n", a.runners()}};
    j["parts"] = ac::partition_from_abacus_a(a).parts();
    return j;
  }
  throw std::invalid_argument("type A supports core, abacus and coroot only");
}

json params_json(const ac::DomainParams& d) {
  return json{{"k", d.k}, {"l1", d.l1}, {"l2", d.l2}, {"axis", d.axis},
              {"level", d.level}};
}

json project_c(const json& j, std::optional<int> flag_n) {
  if (j.contains("letters")) {
    const ac::Word w = ac::word_from_json(j, flag_n);
    const ac::AbacusC a = ac::evaluate_word(w);
    if (a.is_identity()) {
      if (!w.empty()) throw ac::not_reduced("word is not reduced");
      return json{{"image", ac::to_json(ac::Word{w.n - 1, {}})}, {"k", 0}};
    }
    const auto projected = ac::phi_word_traced(w, a);
    json out{{"image", ac::to_json(projected.word)}};
    out.update(params_json(ac::domain_params(a.rank(), ac::first_part(a))));
    json trace = json::array();
    for (const auto& step : projected.trace) trace.push_back(ac::to_json(step));
    out["trace"] = trace;
    return out;
  }
  if (j.contains("parts")) {
    const int n = rank_from(j, flag_n, "a core");
    const ac::SymmetricCore c(ac::partition_from_json(j), n);
    const ac::SymmetricCore image = ac::phi_core(c);
    json out{{"image", ac::to_json(image.partition())}};
    if (c.partition().empty()) {
      out["k"] = 0;
      return out;
    }
    out.update(params_json(ac::domain_params(n, c.partition().first_part())));
    return out;
  }
  if (j.contains("levels")) {
    const ac::AbacusC a = ac::abacus_from_json(j);
    if (a.is_identity())
      return json{{"image", ac::to_json(ac::AbacusC::identity(a.rank() - 1))},
                  {"k", 0}};
    json out{{"image", ac::to_json(ac::phi_abacus(a))}};
    out.update(params_json(ac::domain_params(a.rank(), ac::first_part(a))));
    return out;
  }
  if (j.contains("coords")) {
    const ac::CorootPoint v = ac::coroot_from_json(j);
    const ac::AbacusC a = ac::abacus_from_coroot(v);
    if (a.is_identity())
      return json{{"image", ac::to_json(ac::CorootPoint{
                                std::vector<int>(a.rank() - 1, 0)})},
                  {"k", 0}};
    const int k = ac::first_part(a);
    json out{{"image", ac::to_json(ac::phi_coroot(v, k))}};
    out.update(params_json(ac::domain_params(a.rank(), k)));
    return out;
  }
  throw ac::json_error(
      "payload needs one of \"parts\", \"levels\", \"coords\", \"letters\"");
}

json project_a(const json& j, std::optional<int> flag_n) {
  if (j.contains("parts")) {
    const int n = rank_from(j, flag_n, "a core");
    const ac::CorePartition c(ac::partition_from_json(j), n);
    const ac::CorePartition image = ac::phi_a_core(c);
    const int k = c.partition().first_part();
    const ac::HyperplaneA h = ac::hyperplane_a(n, k);
    json out{{"image", json{{"type", "A"}, {"n", n - 1}}}};
    out["image"]["parts"] = image.partition().parts();
    out.update(json{{"k", k}, {"axis", h.axis}, {"level", h.level}});
    return out;
  }
  if (j.contains("levels") || j.contains("coords")) {
    const ac::AbacusA a = read_a(j.contains("levels") ? "abacus" : "coroot", j, flag_n);
    const int k = ac::first_part_a(a);
    const ac::HyperplaneA h = ac::hyperplane_a(a.runners(), k);
    json image = a.is_identity() ? ac::to_json(ac::AbacusA::identity(a.runners() - 1))
                                 : ac::to_json(ac::phi_a_abacus(a));
    return json{{"image", image}, {"k", k}, {"axis", h.axis}, {"level", h.level}};
  }
  throw ac::json_error("type-A payload needs \"parts\", \"levels\" or \"coords\"");
}

ac::ViewBox parse_window(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    v.push_back(std::stod(item, &used));
    if (used != item.size())
      throw std::invalid_argument("bad number in --window: " + item);
  }
  if (v.size() != 4)
    throw std::invalid_argument("--window needs xmin,ymin,xmax,ymax");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cores, abaci, alcoves and the rank-lowering projection"};
  app.require_subcommand(1);
  app.allow_extras(false);

  Input in;
  std::string out_path;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--payload", in.payload, "Inline JSON payload");
    sub->add_option("--in", in.in_path, "Read JSON payload from file ('-' for stdin)");
    sub->add_option("--out", out_path, "Write output to file instead of stdout");
  };

  // convert
  auto* convert = app.add_subcommand("convert", "Convert between models");
  std::string from, to, type = "C";
  std::optional<int> n_opt;
  const std::vector<std::string> forms{"core", "abacus", "coroot", "window", "word"};
  convert->add_option("--from", from, "Input model")->required()->check(CLI::IsMember(forms));
  convert->add_option("--to", to, "Output model")->required()->check(CLI::IsMember(forms));
  convert->add_option("--type", type, "Affine type")->check(CLI::IsMember({"A", "C"}));
  convert->add_option("--n", n_opt, "Rank (type C) or runner count (type A)");
  add_io(convert);

  // project
  auto* project = app.add_subcommand("project", "Apply the projection one rank down");
  project->add_option("--n", n_opt, "Rank of the input");
  project->add_option("--type", type, "Affine type")->check(CLI::IsMember({"A", "C"}));
  add_io(project);

  // verify
  auto* verify = app.add_subcommand("verify", "Run exhaustive property suites");
  std::string suite = "all";
  int vn = 2, kmax = 6;
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"bijection", "length-drop", "bruhat", "walks", "all"}));
  verify->add_option("--n", vn, "Rank")->check(CLI::Range(2, 4));
  verify->add_option("--kmax", kmax, "Largest first part")->check(CLI::Range(1, 16));
  verify->add_option("--out", out_path, "Write the report to file");

  // render
  auto* render = app.add_subcommand("render", "Draw rank-2 alcove walks as SVG");
  std::vector<std::string> walk_files;
  std::optional<int> render_k;
  std::string window_text;
  render->add_option("--walk", walk_files, "Walk JSON file {\"letters\": [...]}; repeatable");
  render->add_option("--k", render_k, "Highlight the hyperplane for this first part")
      ->check(CLI::PositiveNumber);
  render->add_option("--window", window_text, "xmin,ymin,xmax,ymax");
  render->add_option("--out", out_path, "SVG output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) {
      const json j = read_payload(in);
      json result;
      if (type == "A" || ac::is_type_a(j))
        result = write_a(to, read_a(from, j, n_opt));
      else
        result = write_c(to, read_c(from, j, n_opt));
      write_output(result.dump(2) + "\n", out_path);
      return 0;
    }
    if (project->parsed()) {
      const json j = read_payload(in);
      const json result =
          (type == "A" || ac::is_type_a(j)) ? project_a(j, n_opt) : project_c(j, n_opt);
      write_output(result.dump(2) + "\n", out_path);
      return 0;
    }
    if (verify->parsed()) {
      const json report = ac::verify_suite(suite, vn, kmax);
      write_output(report.dump(2) + "\n", out_path);
      return report["violations"].empty() ? 0 : 1;
    }
    if (render->parsed()) {
      std::vector<ac::AlcoveWalk> walks;
      std::optional<ac::ViewBox> box;
      if (!window_text.empty()) box = parse_window(window_text);
      for (const std::string& path : walk_files) {
        const json j = read_payload({"", path});
        const ac::Word w = ac::word_from_json(j, 2);
        if (w.n != 2) throw ac::rank_mismatch("rendering is only available in rank 2");
        walks.push_back(ac::walk_from_word(w));
        if (!render_k && j.contains("k")) render_k = j.at("k").get<int>();
        if (!box && j.contains("window")) {
          const auto v = j.at("window").get<std::vector<double>>();
          if (v.size() != 4) throw ac::json_error("\"window\" needs 4 numbers");
          box = ac::ViewBox{v[0], v[1], v[2], v[3]};
        }
      }
      std::optional<ac::DomainParams> params;
      if (render_k) params = ac::domain_params(2, *render_k);
      write_output(ac::render_svg_rank2(walks, params, box.value_or(ac::ViewBox{})),
                   out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
