#include "leg/io.hpp"

#include <fstream>
#include <sstream>

namespace leg {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail("SchemaError", std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json word_to_json(const PlatWord& w) {
  Json letters = Json::array();
  for (const Letter& l : w.letters) letters.push_back({{"kind", std::string(1, static_cast<char>(l.kind))}, {"k", l.k}});
  return {{"letters", letters}, {"profile", w.profile}};
}

PlatWord word_from_json(const Json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  return guarded("word", [&] {
    std::vector<Letter> out;
    for (const Json& l : j.at("letters")) {
      std::string kind = l.at("kind").get<std::string>();
      if (kind != "l" && kind != "r" && kind != "s") fail("SchemaError", "letter kind '" + kind + "'");
      out.push_back({static_cast<Kind>(kind[0]), l.at("k").get<int>()});
    }
    PlatWord w = make_word(std::move(out));
    if (j.contains("profile") && j.at("profile").get<std::vector<int>>() != w.profile)
      fail("SchemaError", "profile does not match the letters");
    return w;
  });
}

Json dga_to_json(const Dga& d) {
  Json gens = Json::array(), diff = Json::object();
  for (const Generator& g : d.gens) gens.push_back({{"name", g.name}, {"deg", g.deg}});
  for (int i = 0; i < d.size(); ++i) {
    Json monos = Json::array();
    for (const Mono& m : d.diff[i].terms) {
      Json names = Json::array();
      for (int g : m) names.push_back(d.gens[g].name);
      monos.push_back(names);
    }
    diff[d.gens[i].name] = monos;
  }
  return {{"rho", d.rho}, {"gens", gens}, {"diff", diff}};
}

Dga dga_from_json(const Json& j) {
  return guarded("dga", [&] {
    int rho = j.at("rho").get<int>();
    std::vector<Generator> gens;
    for (const Json& g : j.at("gens")) gens.push_back({g.at("name").get<std::string>(), g.at("deg").get<int>()});
    Dga tmp;
    tmp.gens = gens;
    std::vector<Poly> diff(gens.size());
    const Json& dj = j.contains("diff") ? j.at("diff") : Json::object();
    for (auto it = dj.begin(); it != dj.end(); ++it) {
      int g = tmp.find(it.key());
      if (g < 0) fail("SchemaError", "differential of unknown generator " + it.key());
      for (const Json& mono : it.value()) {
        Mono m;
        for (const Json& name : mono) {
          int h = tmp.find(name.get<std::string>());
          if (h < 0) fail("SchemaError", "unknown generator " + name.get<std::string>());
          m.push_back(h);
        }
        diff[g].add(m);
      }
    }
    return build_dga(rho, gens, diff);
  });
}

Json aform_to_json(const AFormData& a) { return {{"crossings", a.crossings}, {"cusps", a.cusps}}; }

AFormData aform_from_json(const Json& j) {
  return guarded("marks", [&] {
    AFormData a;
    if (j.is_array()) {
      a.crossings = j.get<std::vector<int>>();
      return a;
    }
    if (j.contains("crossings")) a.crossings = j.at("crossings").get<std::vector<int>>();
    if (j.contains("cusps")) a.cusps = j.at("cusps").get<std::vector<int>>();
    return a;
  });
}

Json mcf_to_json(const McfSlice& c) {
  Json hs = Json::array();
  for (size_t g = 0; g < c.slides.size(); ++g)
    for (size_t o = 0; o < c.slides[g].size(); ++o)
      hs.push_back({{"gap", g}, {"order", o}, {"u", c.slides[g][o].u}, {"l", c.slides[g][o].l}});
  return {{"word", word_to_json(c.word)}, {"rho", c.rho()}, {"handleslides", hs}, {"potential", c.mu.mu}};
}

McfSlice mcf_from_json(const Json& j) {
  return guarded("mcf", [&] {
    PlatWord w = word_from_json(j.at("word"));
    int rho = j.at("rho").get<int>();
    MaslovPotential mu;
    if (j.contains("potential")) {
      mu.rho = rho;
      mu.mu = j.at("potential").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(mu.mu.size()) != w.size() + 1) fail("SchemaError", "potential needs one entry per gap");
      for (int g = 0; g <= w.size(); ++g)
        if (static_cast<int>(mu.mu[g].size()) != w.width(g)) fail("SchemaError", "potential width mismatch");
    } else {
      mu = maslov_potential(w, rho);
    }
    SlideList slides(w.size() + 1);
    std::vector<std::tuple<int, int, Slide>> all;
    for (const Json& h : j.at("handleslides")) {
      int g = h.at("gap").get<int>();
      if (g < 0 || g > w.size()) fail("SchemaError", "handleslide gap out of range");
      all.push_back({g, h.value("order", 0), Slide{h.at("u").get<int>(), h.at("l").get<int>()}});
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
    });
    for (auto& [g, o, s] : all) slides[g].push_back(s);
    BuildStatus st;
    auto c = try_build_mcf(w, mu, slides, false, &st);
    if (!c) fail(st.code.empty() ? "InvalidMcf" : st.code, st.message);
    return *c;
  });
}

Json move_to_json(const Move& m) {
  Json j = {{"schema", schema_name(m.schema)}, {"dir", m.forward ? "f" : "b"}, {"pos", m.pos}, {"k", m.k}};
  if (m.variant >= 0) j["v"] = m.variant;
  return j;
}

Move move_from_json(const Json& j) {
  return guarded("move", [&] {
    Move m;
    m.schema = schema_from_name(j.at("schema").get<std::string>());
    std::string dir = j.value("dir", std::string("f"));
    if (dir != "f" && dir != "b") fail("SchemaError", "dir must be f or b");
    m.forward = dir == "f";
    m.pos = j.at("pos").get<int>();
    m.k = j.value("k", 1);
    m.variant = j.value("v", -1);
    return m;
  });
}

Json movie_to_json(const Movie& m) {
  Json moves = Json::array();
  for (const Move& x : m.moves) moves.push_back(move_to_json(x));
  return {{"start", word_to_json(m.start)}, {"moves", moves}};
}

Movie movie_from_json(const Json& j) {
  return guarded("movie", [&] {
    Movie m;
    m.start = word_from_json(j.at("start"));
    for (const Json& x : j.at("moves")) m.moves.push_back(move_from_json(x));
    return m;
  });
}

Json certificate_to_json(const FillingCertificate& c) {
  Json j = movie_to_json(c.movie);
  Json slices = Json::array();
  for (const McfSlice& s : c.slices) slices.push_back(mcf_to_json(s));
  j["slices"] = slices;
  j["tags"] = c.tags;
  j["rho"] = c.rho;
  j["target"] = aform_to_json(c.target);
  return j;
}

FillingCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    FillingCertificate c;
    c.movie = movie_from_json(j);
    for (const Json& s : j.at("slices")) c.slices.push_back(mcf_from_json(s));
    c.tags = j.at("tags").get<std::vector<std::string>>();
    c.rho = j.at("rho").get<int>();
    c.target = aform_from_json(j.at("target"));
    return c;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("IOError", "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail("SchemaError", path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("IOError", "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace leg
