#include "leg/filler.hpp"

#include <utility>

namespace leg {

PlatWord reflect_word(const PlatWord& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (int i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters[i];
    int n = w.width(i);
    switch (l.kind) {
      case Kind::Left: out.push_back({Kind::Left, n + 2 - l.k}); break;
      case Kind::Cross: out.push_back({Kind::Cross, n - l.k}); break;
      case Kind::Right: out.push_back({Kind::Right, n - l.k}); break;
    }
  }
  return make_word(std::move(out));
}

namespace {

struct Split {
  int p = -1, k = 0, s = 0, t = 0, q = 0;
};

// Deconstruction of a word with an MCF, moving toward the empty word (or parked unknots).
class Synth {
 public:
  Synth(const PlatWord& w, const McfSlice& c, const FillOptions& opt) : w_(w), c_(c), opt_(opt) {
    slices_.push_back(c_);
  }

  void run();

  PlatWord w_;
  McfSlice c_;
  FillOptions opt_;
  std::vector<Move> moves_;
  std::vector<McfSlice> slices_;
  std::vector<std::string> tags_;

 private:
  bool refl_ = false;
  int parked_ = 0;

  PlatWord view() const { return refl_ ? reflect_word(w_) : w_; }

  void exec_real(const Move& m) {
    if (static_cast<long long>(moves_.size()) >= opt_.max_moves) fail("Budget", "filling exceeds the move budget");
    MoveSite site = locate_move(w_, m);
    auto mu = carry_potential(c_.mu, w_, site);
    if (!mu) fail("InconsistencyError", "no potential across " + schema_name(m.schema));
    TransportResult r = transport(c_, site.move, *mu, opt_.transport);
    if (!r.ok)
      fail("Obstructed", schema_name(m.schema) + " at " + std::to_string(m.pos) + " on " + render_word(w_) + ": " +
                             r.reason);
    w_ = site.word;
    c_ = r.slices.front();
    moves_.push_back(site.move);
    tags_.push_back(r.tag);
    slices_.push_back(c_);
  }

  // Move written in the current view.
  void exec(const Move& m) {
    if (!refl_) return exec_real(m);
    MoveSite vs = locate_move(reflect_word(w_), m);
    PlatWord target = reflect_word(vs.word);
    for (bool dir : {m.forward, !m.forward})
      for (const MoveSite& cand : moves_at(w_, m.schema, dir, m.pos))
        if (cand.word == target) return exec_real(cand.move);
    fail("InconsistencyError", "no mirror of " + schema_name(m.schema));
  }

  void comm(int pos) { exec({Schema::Comm, true, pos, 1, -1}); }
  void bubble(int from, int to) {
    for (; from > to; --from) comm(from - 1);
    for (; from < to; ++from) comm(from);
  }

  bool is_switch(int letter) {
    SrNormalized n = sr_normalize(c_);
    c_ = n.form.slice;
    slices_.back() = c_;
    return n.form.ruling.role[letter] == Role::Switch;
  }

  Split parse_raw(const PlatWord& v) const {
    Split sp;
    for (int i = v.size() - 1; i >= 2 * parked_; --i)
      if (v.letters[i].kind == Kind::Left) {
        sp.p = i;
        break;
      }
    if (sp.p < 0) return sp;
    sp.k = v.letters[sp.p].k;
    int i = sp.p + 1;
    for (; i < v.size() && v.letters[i].kind == Kind::Cross; ++i) {
      if (v.letters[i].k == sp.k - sp.s - 1)
        ++sp.s;
      else if (v.letters[i].k == sp.k + sp.t + 1)
        ++sp.t;
      else
        break;
    }
    sp.q = i;
    return sp;
  }

  // Puts the upper run before the lower one, and mirrors so that z sits at or above l_k.
  Split parse() {
    for (;;) {
      PlatWord v = view();
      Split sp = parse_raw(v);
      if (sp.p < 0) return sp;
      bool moved = false;
      for (int i = sp.p + 1; i + 1 < sp.q && !moved; ++i)
        if (v.letters[i].k > sp.k && v.letters[i + 1].k < sp.k) {
          comm(i);
          moved = true;
        }
      if (moved) continue;
      if (sp.q >= v.size()) fail("InconsistencyError", "left cusp without closing letters");
      if (v.letters[sp.q].k > sp.k) {
        refl_ = !refl_;
        continue;
      }
      return sp;
    }
  }

  int left_count() const {
    int c = 0;
    for (int i = 2 * parked_; i < w_.size(); ++i) c += w_.letters[i].kind == Kind::Left;
    return c;
  }

  [[noreturn]] void stabilized(const char* where) const {
    fail("StabilizedError", std::string(where) + " on " + render_word(w_) + ": no normal ruling fits");
  }

  bool step(const Split& sp);
  void park(int p);
};

void Synth::park(int p) {
  refl_ = false;
  int k = w_.letters[p].k;
  for (; k > 1; --k) {
    exec_real({Schema::R2, false, p, k - 1, 1});
    exec_real({Schema::R2, true, p + 1, k, 2});
  }
  for (; p > 2 * parked_; --p) {
    comm(p - 1);
    comm(p);
  }
  ++parked_;
}

// One induction step; returns true when the (c, n) measure may stay put (two-sided cusp tangency).
bool Synth::step(const Split& sp) {
  const int p = sp.p, q = sp.q;
  int k = sp.k, s = sp.s, t = sp.t;
  const Letter z = view().letters[q];
  const int j = z.k;

  if (z.kind == Kind::Right) {
    if (j <= k - s - 2) {
      bubble(q, p);
    } else if (j == k - s - 1) {
      if (s == 0) stabilized("zigzag");
      bubble(q, p + s + 1);
      for (;;) {
        if (is_switch(p + 1)) {
          exec({Schema::Pinch, true, p + 2, k, -1});
          exec({Schema::R1, true, p, k - 1, 1});
          bubble(p, p + s);
          break;
        }
        exec({Schema::CuspTangency, true, p, k, 0});
        bubble(p + 1, p + s + 1);
        --k;
        if (--s == 0) stabilized("departures only");
      }
    } else if (s >= 1 && j == k - s) {
      stabilized("crossing then cusp");
    } else if (j < k) {
      bubble(q, p + k - j + 2);
      exec({Schema::R2, true, p + k - j, j, 2});
      bubble(p + k - j, p);
    } else if (s == 0 && t == 0) {
      if (c_.rho() != 1)
        exec_real({Schema::Unknot, true, p, w_.letters[p].k, -1});
      else
        park(p);
    } else if (t == 0) {
      bubble(q, p + 2);
      exec({Schema::R1, true, p, k - 1, 1});
    } else if (s == 0) {
      bubble(q, p + 2);
      exec({Schema::R1, true, p, k, 0});
    } else if (is_switch(p + 1)) {
      exec({Schema::Pinch, true, p + 2, k, -1});
      exec({Schema::R1, true, p, k - 1, 1});
      for (int i = 0; i < s - 1; ++i) bubble(p + 1 + i, p + i);
      int p2 = p + s - 1;
      bubble(p2 + 1 + t, p2 + 2);
      exec({Schema::R1, true, p2, k, 0});
    } else {
      exec({Schema::CuspTangency, true, p, k, 0});
      bubble(p + 1, p + s);
      return true;
    }
    return false;
  }

  // z is a crossing
  if (j <= k - s - 2) {
    bubble(q, p);
  } else if (j == k - s - 1) {
    bubble(q, p + s + 1);
  } else if (s >= 1 && j == k - s) {
    bubble(q, p + s + 1);
    bool done = false;
    while (s >= 2) {
      if (is_switch(p + 1)) {
        exec({Schema::Pinch, true, p + 2, k, -1});
        exec({Schema::R1, true, p, k - 1, 1});
        bubble(p, p + s);
        done = true;
        break;
      }
      exec({Schema::CuspTangency, true, p, k, 0});
      bubble(p + 1, p + s + 1);
      --k;
      --s;
      ++t;
    }
    if (!done) {
      if (is_switch(p + 1)) {
        exec({Schema::Pinch, true, p + 2, k, -1});
        exec({Schema::R1, true, p, k - 1, 1});
      } else {
        exec({Schema::CuspTangency, true, p, k, 0});
        exec({Schema::R2, true, p, k - 1, 1});
      }
    }
  } else if (j < k) {
    bubble(q, p + k - j + 2);
    exec({Schema::R3, false, p + k - j, j - 1, -1});
    bubble(p + k - j, p);
  } else if (s == 0 && t == 0) {
    stabilized("crossing of a cusp's own sheets");
  } else if (t == 0) {
    bubble(q, p + 2);
    exec({Schema::R2, true, p, k, 0});
  } else if (s == 0) {
    bubble(q, p + 2);
    exec({Schema::R2, true, p, k, 1});
  } else {
    bubble(q, p + s + 2);
    bubble(p + s + 1, p + 2);
    bubble(p + s + 2, p + 3);
    if (is_switch(p + 1)) {
      exec({Schema::Pinch, true, p + 2, k, -1});
      exec({Schema::R1, true, p, k - 1, 1});
      exec({Schema::R2, true, p, k, 1});
      for (int i = 0; i < s - 1; ++i) bubble(p + 1 + i, p + i);
    } else {
      exec({Schema::CuspTangency, true, p, k, 0});
      exec({Schema::R3, true, p + 1, k, -1});
      bubble(p + 1, p);
      for (int i = 0; i < s - 1; ++i) bubble(p + 4 + i, p + 2 + i);
    }
  }
  return false;
}

void Synth::run() {
  {
    SrNormalized n = sr_normalize(c_);
    c_ = n.form.slice;
    slices_.back() = c_;
  }
  std::pair<int, int> last{1 << 30, 1 << 30};
  bool may_stay = false;
  for (;;) {
    Split sp = parse();
    if (sp.p < 0) break;
    std::pair<int, int> now{left_count(), w_.size() - sp.q};
    if (now > last || (now == last && !may_stay))
      fail("InconsistencyError", "induction measure did not decrease at " + render_word(w_));
    last = now;
    may_stay = step(sp);
  }
  if (c_.rho() == 1) {
    for (; parked_ > 1; --parked_) exec_real({Schema::Pinch, false, 1, 1, -1});
  } else if (w_.size() != 0) {
    fail("InconsistencyError", "deconstruction stopped at " + render_word(w_));
  }
}

bool equivalent(const McfSlice& a, const McfSlice& b) { return same_slides(a, b) || mcf_equivalent(a, b); }

bool is_unknot_word(const PlatWord& w) { return w == parse_word("l1 r1"); }

}  // namespace

FillingCertificate synthesize_filling(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks,
                                      const FillOptions& opt) {
  auto start = try_aform(w, mu, marks);
  if (!start) fail("NotAnAForm", "marks do not define an MCF on " + render_word(w));
  Synth sy(w, *start, opt);
  sy.run();

  FillingCertificate cert;
  cert.rho = mu.rho;
  cert.target = marks;
  cert.movie.start = sy.w_;
  for (int i = static_cast<int>(sy.moves_.size()) - 1; i >= 0; --i) {
    cert.movie.moves.push_back(inverse_move(sy.moves_[i]));
    cert.tags.push_back(sy.tags_[i]);
  }
  cert.slices.assign(sy.slices_.rbegin(), sy.slices_.rend());
  return cert;
}

VerifyReport verify_certificate(const FillingCertificate& cert, const TransportOptions& opt) {
  auto bad = [](int frame, std::string rule, std::string reason) {
    return VerifyReport{false, frame, std::move(rule), std::move(reason)};
  };
  MovieStats st;
  try {
    st = validate_movie(cert.movie, cert.rho);
  } catch (const Error& e) {
    return bad(-1, "movie", e.what());
  }
  const int frames = static_cast<int>(st.frames.size());
  if (static_cast<int>(cert.slices.size()) != frames) return bad(-1, "shape", "one slice per frame expected");
  if (cert.tags.size() != cert.movie.moves.size()) return bad(-1, "shape", "one tag per move expected");
  for (int i = 0; i < frames; ++i) {
    const McfSlice& c = cert.slices[i];
    if (!(c.word == st.frames[i])) return bad(i, "frame", "slice word differs from the movie frame");
    if (c.rho() != cert.rho) return bad(i, "frame", "slice grading differs");
    std::string msg = check_mcf(c);
    if (!msg.empty()) return bad(i, "wall", msg);
  }
  const PlatWord& w0 = st.frames.front();
  if (w0.size() != 0 && !(cert.rho == 1 && is_unknot_word(w0)))
    return bad(0, "start", "filling must start at the empty word" + std::string(cert.rho == 1 ? " or the unknot" : ""));

  auto target = try_aform(st.frames.back(), cert.slices.back().mu, cert.target);
  if (!target) return bad(frames - 1, "target", "marks are not an A-form");
  if (!equivalent(cert.slices.back(), *target))
    return bad(frames - 1, "equivalence", "final slice is not equivalent to the target A-form");

  for (int i = static_cast<int>(cert.movie.moves.size()) - 1; i >= 0; --i) {
    Move undo = inverse_move(cert.movie.moves[i]);
    TransportResult r = transport(cert.slices[i + 1], undo, cert.slices[i].mu, opt);
    if (!r.ok) return bad(i + 1, cert.tags[i], r.reason);
    if (r.tag != cert.tags[i]) return bad(i + 1, cert.tags[i], "transport used " + r.tag);
    if (!equivalent(r.slices.front(), cert.slices[i]))
      return bad(i, cert.tags[i], "transported slice is not equivalent to the recorded one");
  }
  return {true, -1, "", ""};
}

std::optional<FillingCertificate> close_with_unknot(const FillingCertificate& cert) {
  if (cert.rho != 1 || cert.slices.empty() || !is_unknot_word(cert.movie.start)) return std::nullopt;
  const McfSlice& u = cert.slices.front();
  Move birth{Schema::Unknot, false, 0, 1, -1};
  TransportResult r = transport(u, inverse_move(birth));
  if (!r.ok) return std::nullopt;
  FillingCertificate out = cert;
  out.movie.start = parse_word("");
  out.movie.moves.insert(out.movie.moves.begin(), birth);
  out.slices.insert(out.slices.begin(), r.slices.front());
  out.tags.insert(out.tags.begin(), r.tag);
  return out;
}

}  // namespace leg
