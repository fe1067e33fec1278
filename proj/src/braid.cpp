#include "kbraid/braid.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "kbraid/word_io.hpp"

namespace kbraid {

BraidWord make_braid(int n, std::vector<ArtinLetter> letters) {
  if (n < 1 || n > kMaxStrands) throw Error(Errc::invalid_argument, "strand count out of range");
  for (const ArtinLetter& l : letters) {
    if (l.index < 1 || l.index >= n) {
      throw Error(Errc::invalid_argument, "s" + std::to_string(l.index) + " needs 1 <= i < n = " + std::to_string(n));
    }
    if (l.sign != 1 && l.sign != -1) throw Error(Errc::invalid_argument, "letter sign must be +1 or -1");
  }
  return BraidWord{n, std::move(letters)};
}

BraidWord parse_artin(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<ArtinLetter> letters;
  bool identity = false;
  while (in >> token) {
    if (token == "e") {
      identity = true;
      continue;
    }
    ArtinLetter letter;
    std::string_view rest(token);
    if (rest.size() < 2 || rest[0] != 's') throw Error(Errc::parse_error, "bad braid letter \"" + token + "\"");
    rest.remove_prefix(1);
    const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), letter.index);
    if (ec != std::errc() || end == rest.data()) throw Error(Errc::parse_error, "bad braid letter \"" + token + "\"");
    const std::string_view suffix(end, static_cast<std::size_t>(rest.data() + rest.size() - end));
    if (suffix == "^-1") {
      letter.sign = -1;
    } else if (!suffix.empty() && suffix != "^1") {
      throw Error(Errc::parse_error, "bad braid letter \"" + token + "\"");
    }
    if (letter.index < 1 || letter.index >= n) {
      throw Error(Errc::parse_error, "letter \"" + token + "\" out of range for n=" + std::to_string(n));
    }
    letters.push_back(letter);
  }
  if (identity && !letters.empty()) throw Error(Errc::parse_error, "\"e\" cannot be mixed with letters");
  try {
    return make_braid(n, std::move(letters));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::string format_artin(const BraidWord& braid) {
  if (braid.empty()) return "e";
  std::string out;
  for (const ArtinLetter& l : braid.letters) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw Error(Errc::signature_mismatch, "braids on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& braid) {
  BraidWord out{braid.n, {braid.letters.rbegin(), braid.letters.rend()}};
  for (ArtinLetter& l : out.letters) l.sign = -l.sign;
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

Permutation permutation_of(const BraidWord& braid) {
  // strand_at[s - 1]: strand currently at position s
  std::vector<int> strand_at = identity_permutation(braid.n);
  for (const ArtinLetter& l : braid.letters) {
    std::swap(strand_at[static_cast<std::size_t>(l.index - 1)], strand_at[static_cast<std::size_t>(l.index)]);
  }
  Permutation image(static_cast<std::size_t>(braid.n));
  for (int s = 1; s <= braid.n; ++s) image[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(s - 1)] - 1)] = s;
  return image;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(Errc::invalid_argument, "permutations of different sizes");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i] - 1)];
  return out;
}

bool is_identity(const Permutation& p) { return p == identity_permutation(static_cast<int>(p.size())); }

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

PurePower pure_power(const BraidWord& braid) {
  const Permutation step = permutation_of(braid);
  PurePower out{braid, 1};
  Permutation acc = step;
  while (!is_identity(acc)) {
    acc = compose(acc, step);
    out.braid = concat(out.braid, braid);
    ++out.exponent;
  }
  return out;
}

std::vector<RationalPoint> slot_points(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "need at least one slot");
  std::vector<RationalPoint> out;
  const Rational jitter(1, 4L * n * n);
  for (int j = 1; j <= n; ++j) {
    // Rational point on the unit circle from a rounded half-angle tangent.
    const double theta = (4.0 * j - 3.0) * std::numbers::pi / (2.0 * n);
    Rational s(std::lround(1024.0 * std::tan(theta / 2.0)), 1024);
    s.canonicalize();
    const Rational denom = 1 + s * s;
    Rational c((5L * j * j + 3L * j) % 17 + 1, 18);
    c.canonicalize();
    const Rational rho = 1 + jitter * c;
    out.push_back(RationalPoint{rho * (1 - s * s) / denom, rho * 2 * s / denom});
  }
  return out;
}

namespace {

const Rational kDetour(1, 8);

RationalPoint scaled(const RationalPoint& p, const Rational& f) { return {p.x * f, p.y * f}; }

RationalPoint midpoint(const RationalPoint& a, const RationalPoint& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

}  // namespace

DynamicalSystem realize(const BraidWord& braid, const RealizeOptions& options) {
  if (braid.n < 3) throw Error(Errc::invalid_argument, "realization needs at least 3 strands");
  const std::vector<RationalPoint> slots = slot_points(braid.n);
  const auto n = static_cast<std::size_t>(braid.n);
  const std::size_t length = braid.size();
  const int phases = options.shape == DetourShape::radial ? 3 : 2;

  std::vector<std::vector<Breakpoint>> tracks(n);
  std::vector<std::size_t> slot_of(n);  // current slot (0-based) per strand
  std::vector<std::size_t> strand_at(n);
  for (std::size_t p = 0; p < n; ++p) {
    slot_of[p] = strand_at[p] = p;
    tracks[p].push_back(Breakpoint{Rational(0), slots[p]});
  }

  for (std::size_t j = 0; j < length; ++j) {
    const ArtinLetter& letter = braid.letters[j];
    const auto i = static_cast<std::size_t>(letter.index - 1);
    // The outer strand leaves from slot `from` and lands on slot `to`.
    const std::size_t from = letter.sign > 0 ? i : i + 1;
    const std::size_t to = letter.sign > 0 ? i + 1 : i;
    const std::size_t outer = strand_at[from];
    const std::size_t inner = strand_at[to];
    const RationalPoint& pf = slots[from];
    const RationalPoint& pt = slots[to];

    std::vector<std::vector<RationalPoint>> path(n);
    if (options.shape == DetourShape::radial) {
      path[outer] = {scaled(pf, 1 + kDetour), scaled(pt, 1 + kDetour), pt};
      path[inner] = {pt, pf, pf};
    } else {
      path[outer] = {scaled(midpoint(pf, pt), 1 + kDetour), pt};
      path[inner] = {midpoint(pf, pt), pf};
    }
    for (int ph = 1; ph <= phases; ++ph) {
      Rational t(static_cast<long>(j) * phases + ph, static_cast<long>(length) * phases);
      t.canonicalize();
      for (std::size_t p = 0; p < n; ++p) {
        const RationalPoint pos = path[p].empty() ? slots[slot_of[p]] : path[p][static_cast<std::size_t>(ph - 1)];
        tracks[p].push_back(Breakpoint{t, pos});
      }
    }
    std::swap(strand_at[from], strand_at[to]);
    slot_of[outer] = to;
    slot_of[inner] = from;
  }

  std::vector<ParticleTrajectory> particles;
  for (std::size_t p = 0; p < n; ++p) {
    if (length == 0) tracks[p].push_back(Breakpoint{Rational(1), slots[p]});
    particles.emplace_back(std::move(tracks[p]));
  }
  return DynamicalSystem(std::move(particles));
}

namespace {

const Rational kRetryMagnitude(1, 1024);

Word pleasant_type(const BraidWord& braid, const InvariantOptions& options, const PropertyDetector& detector) {
  const DynamicalSystem base = realize(braid, options.realize);
  std::string last = "realization is not pleasant";
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    try {
      const DynamicalSystem system =
          attempt == 0 ? base : perturb(base, options.seed + static_cast<std::uint64_t>(attempt), kRetryMagnitude);
      const EventScan scan = isolate_event_times(system, detector);
      const PleasantnessReport report = pleasantness_check(system, detector, scan);
      if (report.pleasant()) return event_word(scan);
      last = std::string("realization is not pleasant (") + to_string(report.violations.front().kind) + ")";
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_input) throw;
      last = e.what();
    }
  }
  throw Error(Errc::not_pleasant, last + " after " + std::to_string(options.retries) + " perturbations");
}

}  // namespace

Word invariant_c(const BraidWord& braid, const InvariantOptions& options) {
  return pleasant_type(braid, options, collinearity_detector());
}

Word invariant_c4(const BraidWord& braid, const InvariantOptions& options) {
  if (braid.n < 4) throw Error(Errc::invalid_argument, "the concyclicity invariant needs at least 4 strands");
  return pleasant_type(braid, options, concyclicity_detector());
}

CyclicWord closed_invariant(const BraidWord& braid, const InvariantOptions& options) {
  if (!is_identity(permutation_of(braid))) {
    throw Error(Errc::invalid_argument, "closed invariant needs a pure braid; \"" + format_artin(braid) + "\" is not");
  }
  return to_cyclic(invariant_c(braid, options));
}

TrisecantCertificate trisecant_certificate(const BraidWord& braid, const InvariantOptions& options,
                                           const ReduceOptions& reduce_options) {
  TrisecantCertificate out;
  out.invariant = invariant_c(braid, options);
  out.events = out.invariant.size();
  const Complexity c = complexity(out.invariant, reduce_options);
  out.lower_bound = c.length;
  out.exact = c.exact;
  out.ok = out.events >= out.lower_bound;
  return out;
}

std::string to_json(const TrisecantCertificate& certificate) {
  nlohmann::ordered_json j;
  j["events"] = certificate.events;
  j["lower_bound"] = certificate.lower_bound;
  j["exact"] = certificate.exact;
  j["ok"] = certificate.ok;
  j["invariant"] = format_word(certificate.invariant);
  return j.dump();
}

BraidWord apply_artin_relation(const BraidWord& braid, ArtinRelation relation, std::size_t position) {
  const auto& ls = braid.letters;
  const auto fail = [&](const char* what) -> BraidWord {
    throw Error(Errc::move_not_applicable, std::string(what) + " does not apply at position " + std::to_string(position));
  };
  BraidWord out = braid;
  const auto at = out.letters.begin() + static_cast<std::ptrdiff_t>(position);
  switch (relation) {
    case ArtinRelation::cancel:
      if (position + 1 >= ls.size() || ls[position].index != ls[position + 1].index ||
          ls[position].sign != -ls[position + 1].sign) {
        return fail("cancellation");
      }
      out.letters.erase(at, at + 2);
      return out;
    case ArtinRelation::far_swap:
      if (position + 1 >= ls.size() || std::abs(ls[position].index - ls[position + 1].index) < 2) {
        return fail("far commutation");
      }
      std::swap(out.letters[position], out.letters[position + 1]);
      return out;
    case ArtinRelation::yang_baxter: {
      if (position + 2 >= ls.size()) return fail("braid relation");
      const ArtinLetter a = ls[position];
      const ArtinLetter b = ls[position + 1];
      if (std::abs(a.index - b.index) != 1 || ls[position + 2] != a || a.sign != b.sign) {
        return fail("braid relation");
      }
      out.letters[position] = b;
      out.letters[position + 1] = a;
      out.letters[position + 2] = b;
      return out;
    }
  }
  return fail("relation");
}

std::vector<BraidWord> artin_neighbors(const BraidWord& braid) {
  std::vector<BraidWord> out;
  for (std::size_t pos = 0; pos < braid.size(); ++pos) {
    for (ArtinRelation r : {ArtinRelation::cancel, ArtinRelation::far_swap, ArtinRelation::yang_baxter}) {
      try {
        out.push_back(apply_artin_relation(braid, r, pos));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace kbraid
