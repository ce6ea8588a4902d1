#include "traverse/omega.hpp"

#include "traverse/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace traverse {

bool is_admissible(std::span<const int> entries) {
  if (entries.empty()) return false;
  if (std::any_of(entries.begin(), entries.end(), [](int m) { return m < 1; })) return false;
  if (entries.size() == 1) return entries[0] % 2 == 0;
  if (entries.front() % 2 == 0 || entries.back() % 2 == 0) return false;
  for (std::size_t i = 1; i + 1 < entries.size(); ++i) {
    if (entries[i] % 2 != 0) return false;
  }
  return true;
}

Pattern::Pattern(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_admissible(entries_)) {
    std::ostringstream msg;
    msg << "inadmissible tangency pattern (";
    for (std::size_t i = 0; i < entries_.size(); ++i) msg << (i ? "," : "") << entries_[i];
    msg << ")";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

Pattern Pattern::parse(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    body.push_back(c);
  }
  if (body.empty()) throw Error(ErrorCode::Parse, "empty pattern");
  std::vector<int> entries;
  if (body.find(',') != std::string::npos) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
        throw Error(ErrorCode::Parse, "bad pattern entry '" + item + "'");
      }
      entries.push_back(std::stoi(item));
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::Parse, std::string("bad pattern character '") + c + "'");
      }
      entries.push_back(c - '0');
    }
  }
  return Pattern(std::move(entries));
}

int Pattern::norm() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Pattern::reduced_norm() const { return norm() - support(); }

std::string Pattern::to_string() const {
  const bool wide = std::any_of(entries_.begin(), entries_.end(), [](int m) { return m > 9; });
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (wide && i > 0) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (auto c = a.reduced_norm() <=> b.reduced_norm(); c != 0) return c;
  if (auto c = a.norm() <=> b.norm(); c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::string to_string(const PatternSequence& seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += seq[i].to_string();
  }
  return out + "]";
}

std::vector<Pattern> enumerate_patterns(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "pattern dimension must be non-negative");
  // Reduced norm <= n forces length <= n + 2 and norm <= 2n + 2.
  const int max_len = n + 2;
  const int max_norm = 2 * n + 2;
  std::vector<Pattern> out;
  std::vector<int> current;
  auto extend = [&](auto&& self, int norm) -> void {
    if (!current.empty() && is_admissible(current) && norm - static_cast<int>(current.size()) <= n) {
      out.emplace_back(current);
    }
    if (static_cast<int>(current.size()) == max_len) return;
    for (int m = 1; norm + m <= max_norm; ++m) {
      current.push_back(m);
      // Every entry adds m - 1 to the reduced norm, so prune as soon as it overflows.
      int reduced = norm + m - static_cast<int>(current.size());
      if (reduced <= n + 0) self(self, norm + m);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PatternSequence segment_patterns(std::span<const int> multiplicities) {
  const auto odd = std::count_if(multiplicities.begin(), multiplicities.end(), [](int m) { return m % 2 != 0; });
  if (odd % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "odd number of odd-multiplicity roots: no even-degree polynomial realises it");
  }
  for (int m : multiplicities) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "root multiplicities must be positive");
  }
  PatternSequence out;
  bool negative = false;  // sign just left of the current root; positive at -infinity
  std::vector<int> open;
  for (int m : multiplicities) {
    if (negative) {
      open.push_back(m);
      if (m % 2 != 0) {
        out.emplace_back(open);
        open.clear();
        negative = false;
      }
    } else if (m % 2 != 0) {
      open = {m};
      negative = true;
    } else {
      out.emplace_back(std::vector<int>{m});
    }
  }
  return out;
}

namespace {

void compositions(int total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    current.push_back(part);
    compositions(total - part, current, out);
    current.pop_back();
  }
}

// Every ordered list of real-root multiplicities a single factor of degree m can
// produce after a small perturbation.
std::vector<std::vector<int>> local_splittings(int m) {
  std::vector<std::vector<int>> out;
  for (int pairs = 0; 2 * pairs <= m; ++pairs) {
    std::vector<int> current;
    compositions(m - 2 * pairs, current, out);
  }
  return out;
}

}  // namespace

std::set<PatternSequence> resolutions(const Pattern& w) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int m : w.entries()) choices.push_back(local_splittings(m));
  std::set<PatternSequence> out;
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    std::vector<int> roots;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& part = choices[i][index[i]];
      roots.insert(roots.end(), part.begin(), part.end());
    }
    out.insert(segment_patterns(roots));
    std::size_t k = 0;
    while (k < index.size() && ++index[k] == choices[k].size()) index[k++] = 0;
    if (k == index.size()) break;
  }
  return out;
}

PatternPoset build_poset(int n) {
  if (n < 0 || n > 6) throw Error(ErrorCode::InvalidArgument, "poset dimension must lie in [0, 6]");
  PatternPoset poset;
  poset.n = n;
  poset.elements = enumerate_patterns(n);
  std::map<Pattern, int> index;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) index.emplace(poset.elements[i], static_cast<int>(i));
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    std::set<int> shallow;
    for (const auto& seq : resolutions(poset.elements[i])) {
      for (const auto& p : seq) {
        if (p == poset.elements[i]) continue;
        if (auto it = index.find(p); it != index.end()) shallow.insert(it->second);
      }
    }
    for (int j : shallow) poset.relations.emplace_back(static_cast<int>(i), j);
  }
  return poset;
}

std::string export_hasse_dot(const PatternPoset& poset) {
  std::set<std::pair<int, int>> rel(poset.relations.begin(), poset.relations.end());
  std::ostringstream out;
  out << "digraph omega_" << poset.n << " {\n";
  out << "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const auto& p = poset.elements[i];
    out << "  p" << i << " [label=\"" << p.to_string() << " | " << p.norm() << " | " << p.reduced_norm() << "\"];\n";
  }
  for (const auto& [deep, shallow] : poset.relations) {
    bool covered = false;
    for (std::size_t mid = 0; mid < poset.elements.size() && !covered; ++mid) {
      const int m = static_cast<int>(mid);
      covered = m != deep && m != shallow && rel.count({deep, m}) && rel.count({m, shallow});
    }
    if (!covered) out << "  p" << shallow << " -> p" << deep << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace traverse
