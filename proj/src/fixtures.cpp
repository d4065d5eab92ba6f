#include <algorithm>
#include <utility>

#include "scrutineer/core.hpp"

namespace scrutineer {

namespace {

const std::vector<std::pair<std::string, std::string>>& catalog() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"PLINY",
       "alternatives: a,b,c\n"
       "102: a>b>c\n"
       "101: b>a>c\n"
       "100: c>b>a\n"},
      {"GORE",
       "alternatives: Buchanan,Bush,Gore,Nader\n"
       "2: Nader>Gore>Bush>Buchanan\n"
       "49: Gore>Bush>Nader>Buchanan\n"
       "48: Bush>Buchanan>Gore>Nader\n"
       "1: Buchanan>Bush>Gore>Nader\n"},
      {"CONDORCET1",
       "alternatives: a,b,c\n"
       "1: a>b>c\n"
       "1: b>c>a\n"
       "1: c>a>b\n"},
      {"CONDORCET2",
       "alternatives: a,b,c\n"
       "102: a>b>c\n"
       "101: b>c>a\n"
       "100: c>a>b\n"},
      {"CONDORCET3",
       "alternatives: a,b,c,d\n"
       "1: a>b>c>d\n"
       "1: b>c>a>d\n"
       "1: c>a>b>d\n"},
      {"RUNOFF_A",
       "alternatives: a,b,c\n"
       "8: a>b>c\n"
       "10: c>a>b\n"
       "7: b>c>a\n"},
      {"RUNOFF_B",
       "alternatives: a,b,c\n"
       "6: a>b>c\n"
       "2: c>a>b\n"
       "10: c>a>b\n"
       "7: b>c>a\n"},
      {"ZWICKER",
       "alternatives: a,b,c,d,e\n"
       "2: a>b>c>d>e\n"
       "3: d>e>b>c>a\n"
       "2: e>c>a>d>b\n"},
      {"SP_RESOLUTE",
       "alternatives: a,b,c\n"
       "1: a>b>c\n"
       "1: b>a>c\n"
       "1: c>b>a\n"},
      {"DYNAMIC",
       "alternatives: a,b,c\n"
       "1: a>c>b\n"
       "1: b>c>a\n"
       "1: c>b>a\n"},
      {"YOUNG",
       "alternatives: a,b,c\n"
       "23: a>b>c\n"
       "17: b>c>a\n"
       "2: b>a>c\n"
       "10: c>a>b\n"
       "8: c>b>a\n"},
      {"HIKERS",
       "alternatives: l,m,s\n"
       "1: l>m>s\n"
       "1: s>m>l\n"
       "1: m>s>l\n"},
      {"FALISZ",
       "alternatives: a,b,c,d,e\n"
       "1: a>b>c>d>e\n"
       "1: e>a>b>d>c\n"
       "1: d>a>b>c>e\n"
       "1: c>b>d>e>a\n"
       "1: c>b>e>a>d\n"
       "1: b>c>d>e>a\n"},
      {"BARBERA",
       "alternatives: a,b,c,d,e\n"
       "1: a>b>c>d>e\n"
       "1: a>b>e>c>d\n"
       "1: a>b>d>e>c\n"
       "1: c>d>e>a>b\n"
       "1: e>c>d>a>b\n"
       "1: d>e>c>a>b\n"},
  };
  return table;
}

}  // namespace

Profile fixture(std::string_view name) {
  for (const auto& [key, text] : catalog())
    if (key == name) return parse_profile(text);
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : catalog()) v.push_back(entry.first);
    return v;
  }();
  return names;
}

}  // namespace scrutineer
