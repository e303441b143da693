#include "cqs/string_constraints.hpp"

#include <algorithm>
#include <map>

namespace cqs {

std::u32string utf8_decode(const std::string& s) {
  std::u32string out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    char32_t cp;
    int extra;
    if (c < 0x80) { cp = c; extra = 0; }
    else if ((c >> 5) == 0x6) { cp = c & 0x1f; extra = 1; }
    else if ((c >> 4) == 0xe) { cp = c & 0x0f; extra = 2; }
    else if ((c >> 3) == 0x1e) { cp = c & 0x07; extra = 3; }
    else { out.push_back(0xfffd); ++i; continue; }
    bool bad = false;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size() || (static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) { bad = true; break; }
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3f);
    }
    if (bad) { out.push_back(0xfffd); ++i; continue; }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string utf8_encode(const std::u32string& s) {
  std::string out;
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xc0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xe0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    } else {
      out += static_cast<char>(0xf0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
      out += static_cast<char>(0x80 | (cp & 0x3f));
    }
  }
  return out;
}

namespace {

// Generalized suffix automaton over code points.
struct SuffixAutomaton {
  struct State {
    int len = 0;
    int link = -1;
    std::map<char32_t, int> next;
    int end_pos = -1;  // end of one occurrence of the longest string in the state
    int source = -1;   // string holding that occurrence
    int last_group = -1;
    int groups = 0;
  };
  std::vector<State> st{State{}};

  int extend(int last, char32_t c, int src, int pos) {
    auto it = st[last].next.find(c);
    if (it != st[last].next.end()) {
      int q = it->second;
      if (st[q].len == st[last].len + 1) return q;
      int clone = clone_state(q, st[last].len + 1);
      for (int p = last; p != -1; p = st[p].link) {
        auto jt = st[p].next.find(c);
        if (jt == st[p].next.end() || jt->second != q) break;
        jt->second = clone;
      }
      st[q].link = clone;
      return clone;
    }
    int cur = static_cast<int>(st.size());
    st.push_back(State{});
    st[cur].len = st[last].len + 1;
    st[cur].end_pos = pos;
    st[cur].source = src;
    int p = last;
    while (p != -1 && !st[p].next.count(c)) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      int q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = q;
      } else {
        int clone = clone_state(q, st[p].len + 1);
        while (p != -1) {
          auto jt = st[p].next.find(c);
          if (jt == st[p].next.end() || jt->second != q) break;
          jt->second = clone;
          p = st[p].link;
        }
        st[q].link = clone;
        st[cur].link = clone;
      }
    }
    return cur;
  }

  int clone_state(int q, int len) {
    int clone = static_cast<int>(st.size());
    State c = st[q];
    c.len = len;
    c.last_group = -1;
    c.groups = 0;
    st.push_back(std::move(c));
    return clone;
  }
};

}  // namespace

std::u32string longest_common_substring(const std::vector<std::vector<std::u32string>>& groups) {
  if (groups.empty()) return {};
  for (const auto& g : groups)
    if (g.empty()) return {};
  SuffixAutomaton sam;
  std::vector<const std::u32string*> strings;
  for (const auto& g : groups)
    for (const auto& s : g) {
      int src = static_cast<int>(strings.size());
      strings.push_back(&s);
      int last = 0;
      for (size_t i = 0; i < s.size(); ++i) last = sam.extend(last, s[i], src, static_cast<int>(i));
    }
  // Mark every state reached by a prefix of a group's string, walking suffix links.
  const int G = static_cast<int>(groups.size());
  for (int gi = 0; gi < G; ++gi) {
    for (const auto& s : groups[gi]) {
      int cur = 0;
      for (char32_t c : s) {
        cur = sam.st[cur].next.at(c);
        for (int p = cur; p > 0 && sam.st[p].last_group != gi; p = sam.st[p].link) {
          sam.st[p].last_group = gi;
          ++sam.st[p].groups;
        }
      }
    }
  }
  int best_len = 0;
  for (size_t i = 1; i < sam.st.size(); ++i)
    if (sam.st[i].groups == G) best_len = std::max(best_len, sam.st[i].len);
  if (best_len == 0) return {};
  std::u32string best;
  bool have = false;
  for (size_t i = 1; i < sam.st.size(); ++i) {
    const auto& s = sam.st[i];
    if (s.groups != G || s.len != best_len) continue;
    const auto& src = *strings[s.source];
    std::u32string cand = src.substr(s.end_pos + 1 - best_len, best_len);
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

StrPred strongest_predicate(const std::vector<std::set<std::string>>& w, const std::string& literal) {
  for (StrPred p : {StrPred::Equal, StrPred::Prefix, StrPred::Suffix}) {
    bool all = std::all_of(w.begin(), w.end(), [&](const auto& group) {
      return std::any_of(group.begin(), group.end(), [&](const auto& v) { return holds(p, v, literal); });
    });
    if (all) return p;
  }
  return StrPred::Contain;
}

std::optional<SynthesizedConstraint> syn_lcs(const std::vector<std::set<std::string>>& w) {
  if (w.empty()) return std::nullopt;
  std::vector<std::vector<std::u32string>> groups;
  for (const auto& g : w) {
    if (g.empty()) return std::nullopt;
    std::vector<std::u32string> dg;
    for (const auto& v : g) dg.push_back(utf8_decode(v));
    groups.push_back(std::move(dg));
  }
  auto l = longest_common_substring(groups);
  if (l.empty()) return std::nullopt;
  auto lit = utf8_encode(l);
  return SynthesizedConstraint{strongest_predicate(w, lit), lit};
}

}  // namespace cqs
