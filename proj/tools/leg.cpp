#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "leg/cellular.hpp"
#include "leg/filler.hpp"
#include "leg/fixtures.hpp"
#include "leg/io.hpp"
#include "leg/render.hpp"

using namespace leg;

namespace {

struct Global {
  bool json = false;
  long long budget = kDefaultBudget;
  unsigned seed = 1;
};

// Input problems exit with 2, everything else the library raises is a negative answer.
const std::set<std::string> kInputCodes = {"LexError",  "StrandError", "OpenEndsError", "SchemaError",
                                           "IOError",   "UnknownFixture", "NotAnAForm"};

int emit(const Global& g, const Json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

// A word on the command line, a fixture name, or a JSON file holding a word.
PlatWord word_arg(const std::string& s) {
  for (const Fixture& f : fixtures())
    if (f.name == s) return parse_word(f.word);
  if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return word_from_json(read_json_file(s));
  return parse_word(s);
}

std::string list(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

AFormData marks_arg(const std::string& s) {
  if (s.empty()) return {};
  std::ifstream probe(s);
  if (probe) return aform_from_json(read_json_file(s));
  return aform_from_json(Json::parse(s));
}

int cmd_validate(const Global& g, const std::string& ws) {
  PlatWord w = word_arg(ws);
  auto comps = components(w);
  Json j = word_to_json(w);
  j["components"] = comps.count;
  return emit(g, j, "valid: " + render_word(w) + " (" + std::to_string(w.size()) + " letters, " +
                        std::to_string(comps.count) + " component(s))\n");
}

int cmd_invariants(const Global& g, const std::string& ws) {
  PlatWord w = word_arg(ws);
  auto inv = classical_invariants(w);
  int comps = components(w).count;
  int crossings = static_cast<int>(crossing_letters(w).size());
  Json j = {{"tb", inv.tb}, {"rot", inv.rot}, {"writhe", inv.writhe}, {"components", comps}, {"crossings", crossings}};
  std::string t = "tb " + std::to_string(inv.tb) + "\nrot " + list(inv.rot) + "\ncomponents " + std::to_string(comps) +
                  "\ncrossings " + std::to_string(crossings) + "\n";
  if (comps == 1) {
    j["determinant"] = knot_determinant(w);
    t += "determinant " + std::to_string(knot_determinant(w)) + "\n";
  }
  return emit(g, j, t);
}

int cmd_dga(const Global& g, const std::string& ws, int rho, bool cylinder) {
  PlatWord w = word_arg(ws);
  auto cell = cellular_dga(w, maslov_potential(w, rho));
  Dga d = cylinder ? product_cylinder_dga(cell) : cell.dga;
  Json j = dga_to_json(d);
  std::string t;
  for (int i = 0; i < d.size(); ++i) {
    t += d.gens[i].name + " [" + std::to_string(d.gens[i].deg) + "] -> ";
    if (d.diff[i].empty()) t += "0";
    bool first = true;
    for (const Mono& m : d.diff[i].terms) {
      t += first ? "" : " + ";
      first = false;
      if (m.empty()) t += "1";
      for (size_t k = 0; k < m.size(); ++k) t += (k ? " " : "") + d.gens[m[k]].name;
    }
    t += "\n";
  }
  return emit(g, j, t);
}

int cmd_augs(const Global& g, const std::string& ws, int rho, bool classes) {
  PlatWord w = word_arg(ws);
  auto cell = cellular_dga(w, maslov_potential(w, rho));
  Json j = {{"rho", rho}};
  std::string t;
  if (classes) {
    // homotopy classes survive the cancellation of trivial pairs
    Reduction red = reduce_dga(cell.dga);
    auto cls = homotopy_classes(red.reduced, g.budget);
    j["classes"] = cls.size();
    t = std::to_string(cls.size()) + " classes\n";
  } else {
    auto augs = enumerate_augmentations(cell.dga, g.budget);
    Json list_j = Json::array();
    for (const Aug& a : augs) {
      std::vector<std::string> ones;
      for (int i = 0; i < cell.dga.size(); ++i)
        if (a[i]) ones.push_back(cell.dga.gens[i].name);
      list_j.push_back(ones);
    }
    j["augmentations"] = list_j;
    t = std::to_string(augs.size()) + " augmentations\n";
  }
  return emit(g, j, t);
}

int cmd_rulings(const Global& g, const std::string& ws, int rho) {
  PlatWord w = word_arg(ws);
  auto rs = enumerate_rulings(w, maslov_potential(w, rho));
  Json arr = Json::array();
  std::string t = std::to_string(rs.size()) + " normal rulings\n";
  for (const auto& r : rs) {
    std::vector<int> sw;
    for (int i = 0; i < w.size(); ++i)
      if (r.role[i] == Role::Switch) sw.push_back(i);
    arr.push_back({{"switches", sw}});
    t += "  switches at letters " + list(sw) + "\n";
  }
  return emit(g, {{"rulings", arr}}, t);
}

int cmd_mcf(const Global& g, const std::string& mode, const std::string& arg, int rho, const std::string& marks) {
  if (mode == "check") {
    McfSlice c = mcf_from_json(read_json_file(arg));
    std::string msg = check_mcf(c);
    emit(g, {{"valid", msg.empty()}, {"reason", msg}}, msg.empty() ? "valid MCF\n" : "invalid: " + msg + "\n");
    return msg.empty() ? 0 : 1;
  }
  PlatWord w = word_arg(arg);
  auto mu = maslov_potential(w, rho);
  if (mode == "aform") {
    if (!marks.empty()) {
      auto c = try_aform(w, mu, marks_arg(marks));
      if (!c) {
        emit(g, {{"valid", false}}, "not an A-form\n");
        return 1;
      }
      return emit(g, mcf_to_json(*c), "valid A-form with " + std::to_string(c->slide_count()) + " handleslides\n");
    }
    auto forms = enumerate_aforms(w, mu, g.budget);
    int count = 0;
    auto ids = aform_classes(w, mu, &count);
    Json arr = Json::array();
    std::string t = std::to_string(forms.size()) + " A-forms in " + std::to_string(count) + " classes\n";
    for (size_t i = 0; i < forms.size(); ++i) {
      arr.push_back({{"marks", aform_to_json(forms[i])}, {"crossing_numbers", crossing_numbers(w, forms[i])},
                     {"class", ids[i]}});
      t += "  " + list(crossing_numbers(w, forms[i])) + (forms[i].cusps.empty() ? "" : " cusps " + list(forms[i].cusps)) +
           "  class " + std::to_string(ids[i]) + "\n";
    }
    return emit(g, {{"aforms", arr}, {"classes", count}}, t);
  }
  if (mode == "sr") {
    auto srs = sr_enumerate(w, mu);
    Json arr = Json::array();
    std::string t = std::to_string(srs.size()) + " SR-forms\n";
    for (const auto& s : srs) {
      arr.push_back({{"returns", s.returns}, {"cusps", s.cusps}, {"mcf", mcf_to_json(s.slice)}});
      t += "  marked returns " + list(s.returns) + (s.cusps.empty() ? "" : " cusps " + list(s.cusps)) + "\n";
    }
    return emit(g, {{"srforms", arr}}, t);
  }
  throw CLI::ValidationError("mcf", "mode must be aform, sr or check");
}

int cmd_movie(const Global& g, const std::string& mode, const std::string& path, int rho) {
  Movie m = movie_from_json(read_json_file(path));
  if (mode == "apply") {
    PlatWord w = m.start;
    Json frames = Json::array({render_word(w)});
    std::string t = render_word(w) + "\n";
    for (const Move& mv : m.moves) {
      w = apply_move(w, mv);
      frames.push_back(render_word(w));
      t += render_word(w) + "\n";
    }
    return emit(g, {{"frames", frames}}, t);
  }
  if (mode == "validate") {
    auto st = validate_movie(m, rho);
    Json chords = Json::array();
    for (const Chord& c : st.chords) chords.push_back({{"move", c.move}, {"degree", c.degree}});
    Json j = {{"frames", st.frames.size()}, {"euler", st.euler}, {"components", st.surface_components},
              {"has_potential", st.has_potential}, {"orientable", st.orientable}, {"chords", chords}};
    if (st.genus) j["genus"] = *st.genus;
    std::string t = "frames " + std::to_string(st.frames.size()) + "\neuler " + std::to_string(st.euler) +
                    "\nsurface components " + std::to_string(st.surface_components) + "\npotential " +
                    (st.has_potential ? "yes" : "no") + "\norientable " + (st.orientable ? "yes" : "no") +
                    (st.genus ? "\ngenus " + std::to_string(*st.genus) : "") + "\nchords " +
                    std::to_string(st.chords.size()) + "\n";
    emit(g, j, t);
    return st.has_potential ? 0 : 1;
  }
  if (mode == "induce") {
    auto ind = induced_set_of_filling(m, rho, {}, std::nullopt, g.budget);
    PlatWord end = end_word(m);
    Json arr = Json::array();
    std::string t = std::to_string(ind.classes.size()) + " induced class(es)\n";
    for (size_t i = 0; i < ind.classes.size(); ++i) {
      auto nums = crossing_numbers(end, ind.reps[i]);
      arr.push_back({{"class", ind.classes[i]}, {"aform", aform_to_json(ind.reps[i])}, {"crossing_numbers", nums}});
      t += "  class " + std::to_string(ind.classes[i]) + " A-form " + list(nums) + "\n";
    }
    return emit(g, {{"classes", arr}}, t);
  }
  throw CLI::ValidationError("movie", "mode must be apply, validate or induce");
}

int cmd_fill(const Global& g, const std::string& ws, int rho, const std::string& marks, const std::string& out) {
  PlatWord w = word_arg(ws);
  auto cert = synthesize_filling(w, maslov_potential(w, rho), marks_arg(marks));
  Json j = certificate_to_json(cert);
  if (!out.empty()) {
    write_json_file(out, j);
    std::cout << "wrote " << out << " (" << cert.movie.moves.size() << " moves)\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const Global& g, const std::string& path) {
  auto cert = certificate_from_json(read_json_file(path));
  auto r = verify_certificate(cert);
  Json j = {{"pass", r.pass}};
  if (!r.pass) j.update({{"frame", r.frame}, {"rule", r.rule}, {"reason", r.reason}});
  emit(g, j, r.pass ? "PASS\n" : "FAIL at frame " + std::to_string(r.frame) + " (" + r.rule + "): " + r.reason + "\n");
  return r.pass ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& svg) {
  std::string text;
  bool is_json = in.size() > 5 && in.substr(in.size() - 5) == ".json";
  if (is_json) {
    Json j = read_json_file(in);
    if (j.contains("slices")) {
      auto cert = certificate_from_json(j);
      text = frames_svg(validate_movie(cert.movie, cert.rho).frames, &cert.slices);
    } else if (j.contains("moves")) {
      text = frames_svg(validate_movie(movie_from_json(j), 0).frames);
    } else if (j.contains("handleslides")) {
      McfSlice c = mcf_from_json(j);
      text = front_svg(c.word, &c);
    } else {
      text = front_svg(word_from_json(j));
    }
  } else {
    text = front_svg(word_arg(in));
  }
  std::ofstream out(svg);
  if (!out) fail("IOError", "cannot write " + svg);
  out << text;
  std::cout << "wrote " << svg << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian fronts, augmentations, MCFs and filling movies"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--budget", g.budget, "enumeration bound");
  app.add_option("--seed", g.seed, "random seed");

  std::string word, mode, path, marks, out, svg;
  int rho = 0, letters = 10;
  bool cylinder = false, classes = false;

  auto* validate = app.add_subcommand("validate", "parse and check a front word");
  validate->add_option("word", word)->required();
  auto* invariants = app.add_subcommand("invariants", "tb, rotation and friends");
  invariants->add_option("word", word)->required();
  auto* dga = app.add_subcommand("dga", "cellular DGA");
  dga->add_option("word", word)->required();
  dga->add_option("--rho", rho);
  dga->add_flag("--cylinder", cylinder, "product cylinder algebra");
  auto* augs = app.add_subcommand("augs", "augmentations of the cellular DGA");
  augs->add_option("word", word)->required();
  augs->add_option("--rho", rho);
  augs->add_flag("--classes", classes, "count homotopy classes");
  auto* rulings = app.add_subcommand("rulings", "normal rulings");
  rulings->add_option("word", word)->required();
  rulings->add_option("--rho", rho);
  auto* mcf = app.add_subcommand("mcf", "A-forms, SR-forms and MCF checks");
  mcf->add_option("mode", mode, "aform | sr | check")->required();
  mcf->add_option("input", path, "word, or MCF JSON for check")->required();
  mcf->add_option("--rho", rho);
  mcf->add_option("--marks", marks, "A-form marks (JSON file or inline JSON)");
  auto* movie = app.add_subcommand("movie", "apply, validate or induce along a movie");
  movie->add_option("mode", mode, "apply | validate | induce")->required();
  movie->add_option("movie", path)->required();
  movie->add_option("--rho", rho);
  auto* fill = app.add_subcommand("fill", "synthesize a filling certificate");
  fill->add_option("word", word)->required();
  fill->add_option("--rho", rho);
  fill->add_option("--marks", marks, "A-form marks (JSON file or inline JSON)");
  fill->add_option("-o,--out", out, "certificate path");
  auto* verify = app.add_subcommand("verify", "check a filling certificate");
  verify->add_option("cert", path)->required();
  auto* render = app.add_subcommand("render", "draw a front, MCF, movie or certificate");
  render->add_option("input", path)->required();
  render->add_option("--svg", svg)->required();
  auto* random = app.add_subcommand("random", "random front word from --seed");
  random->add_option("--letters", letters);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(g, word);
    if (*invariants) return cmd_invariants(g, word);
    if (*dga) return cmd_dga(g, word, rho, cylinder);
    if (*augs) return cmd_augs(g, word, rho, classes);
    if (*rulings) return cmd_rulings(g, word, rho);
    if (*mcf) return cmd_mcf(g, mode, path, rho, marks);
    if (*movie) return cmd_movie(g, mode, path, rho);
    if (*fill) return cmd_fill(g, word, rho, marks, out);
    if (*verify) return cmd_verify(g, path);
    if (*render) return cmd_render(path, svg);
    if (*random) {
      std::mt19937 rng(g.seed);
      std::cout << random_word(rng, letters) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (g.json) std::cout << Json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kInputCodes.count(e.code()) ? 2 : 1;
  } catch (const Json::exception& e) {
    std::cerr << "SchemaError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
