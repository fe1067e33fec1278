#include "kbraid/picture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace kbraid {

namespace {

constexpr double kColumn = 40.0;  // px between strands
constexpr double kHeight = 60.0;  // px per band
constexpr double kMargin = 30.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::size_t Diagram::count(CrossingKind kind) const {
  std::size_t c = 0;
  for (const Crossing& x : crossings) c += x.kind == kind ? 1 : 0;
  return c;
}

Diagram layout(const Word& word) {
  const Signature sig = word.signature;
  Diagram d{sig, {}, {}};
  d.strands.resize(static_cast<std::size_t>(sig.n));
  for (int i = 1; i <= sig.n; ++i) d.strands[static_cast<std::size_t>(i - 1)].push_back({static_cast<double>(i), 0.0});

  const std::size_t bands = word.size();
  for (std::size_t j = 0; j < bands; ++j) {
    const Multiindex m = word.letters[j];
    const double y0 = static_cast<double>(j) / static_cast<double>(bands);
    const double y1 = static_cast<double>(j + 1) / static_cast<double>(bands);
    const double ymid = (y0 + y1) / 2;
    const std::vector<int> members = m.indices();
    double xc = 0;
    for (int i : members) xc += i;
    xc /= static_cast<double>(members.size());
    if (xc == std::floor(xc) && !m.contains(static_cast<int>(xc))) xc += 0.5;

    d.crossings.push_back(Crossing{{xc, ymid}, m, CrossingKind::generator, j});
    for (int i : members) {
      auto& path = d.strands[static_cast<std::size_t>(i - 1)];
      if (path.back().y < y0) path.push_back({static_cast<double>(i), y0});
      if (static_cast<double>(i) != xc) path.push_back({xc, ymid});
      path.push_back({static_cast<double>(i), y1});
    }
    // Uninvolved strands stay vertical; each leg passing over one crosses it twice.
    std::vector<Crossing> artifacts;
    for (int i : members) {
      const double lo = std::min<double>(i, xc);
      const double hi = std::max<double>(i, xc);
      for (int q = 1; q <= sig.n; ++q) {
        if (m.contains(q) || !(lo < q && q < hi)) continue;
        const double f = (q - i) / (xc - i);
        const Multiindex pair = Multiindex::from_mask((std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (q - 1)));
        artifacts.push_back(Crossing{{static_cast<double>(q), y0 + f * (ymid - y0)}, pair, CrossingKind::artifact, j});
        artifacts.push_back(Crossing{{static_cast<double>(q), y1 - f * (y1 - ymid)}, pair, CrossingKind::artifact, j});
      }
    }
    std::sort(artifacts.begin(), artifacts.end(), [](const Crossing& a, const Crossing& b) {
      return a.position.y != b.position.y ? a.position.y < b.position.y : a.position.x < b.position.x;
    });
    d.crossings.insert(d.crossings.end(), artifacts.begin(), artifacts.end());
  }
  for (int i = 1; i <= sig.n; ++i) {
    auto& path = d.strands[static_cast<std::size_t>(i - 1)];
    if (path.back().y < 1.0) path.push_back({static_cast<double>(i), 1.0});
  }
  return d;
}

std::string render_svg(const Diagram& diagram) {
  const double bands = std::max<double>(1.0, static_cast<double>(diagram.count(CrossingKind::generator)));
  const double width = kColumn * (diagram.signature.n + 1);
  const double height = kHeight * bands + 2 * kMargin;
  const auto px = [&](const DiagramPoint& p) { return fixed(p.x * kColumn) + "," + fixed(kMargin + p.y * kHeight * bands); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (std::size_t s = 0; s < diagram.strands.size(); ++s) {
    std::string d;
    for (const DiagramPoint& p : diagram.strands[s]) d += (d.empty() ? "M" : " L") + px(p);
    out += "<path class=\"strand\" id=\"strand" + std::to_string(s + 1) + "\" d=\"" + d + "\"/>\n";
  }
  out += "</g>\n";
  for (const Crossing& c : diagram.crossings) {
    const std::string at = px(c.position);
    const auto comma = at.find(',');
    const std::string pos = "cx=\"" + at.substr(0, comma) + "\" cy=\"" + at.substr(comma + 1) + "\"";
    if (c.kind == CrossingKind::generator) {
      out += "<circle class=\"generator\" " + pos + " r=\"4.00\" fill=\"black\"><title>" + c.strands.to_string() +
             "</title></circle>\n";
    } else {
      out += "<circle class=\"artifact\" " + pos + " r=\"6.00\" fill=\"none\" stroke=\"gray\"/>\n";
    }
  }
  for (int i = 1; i <= diagram.signature.n; ++i) {
    out += "<text x=\"" + fixed(i * kColumn) + "\" y=\"" + fixed(kMargin / 2) + "\" text-anchor=\"middle\" font-size=\"12\">" +
           std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_minimal_graph(const Word& word, const ReduceOptions& options) {
  if (word.signature.k != 2) throw Error(Errc::unsupported_signature, "minimal graphs are only drawn for k = 2");
  const Word canon = canonical_form(word, options);
  std::string out = "graph minimal {\n";
  for (std::size_t v = 0; v < canon.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + canon.letters[v].to_string() + "\"];\n";
  }
  for (int s = 1; s <= word.signature.n; ++s) {
    std::size_t last = SIZE_MAX;
    for (std::size_t v = 0; v < canon.size(); ++v) {
      if (!canon.letters[v].contains(s)) continue;
      if (last != SIZE_MAX) {
        out += "  v" + std::to_string(last) + " -- v" + std::to_string(v) + " [label=\"" + std::to_string(s) + "\"];\n";
      }
      last = v;
    }
  }
  out += "}\n";
  return out;
}

}  // namespace kbraid
