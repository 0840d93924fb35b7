#pragma once

// Reference presentations and word lists for the census examples, shared by the
// unit and acceptance tests.

#include <string>
#include <vector>

#include "flab/presentation.hpp"

namespace flab::data {

inline Presentation v3036() {
  Presentation p = make_presentation("v3036", "ab", {"a3b3AbAb3a3b3AbAb4AbAb3"});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

inline Presentation v1539() {
  Presentation p = make_presentation("v1539", "ab", {"a4B2Ab3AB2Ab3AB2"});
  p.cusps.push_back({p.word("Ab"), p.word("B3a5B2")});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

inline Presentation v2943() {
  Presentation p = make_presentation("v2943", "ab", {"abAB2AbaBAba3bABab2aBAbaBA3B"});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

// First A3 read as a3; the word as given is unbalanced in a.
inline Presentation v3379() {
  Presentation p = make_presentation("v3379", "ab", {"abABa3BAbaBAbaB2abABabA3baBAbaBAb2AB"});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

inline Presentation v3384() {
  Presentation p = make_presentation("v3384", "abc", {"ab2ab2aCb2ab2abcb", "aCAc"});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

inline Presentation v3396() {
  Presentation p = make_presentation("v3396", "abc", {"aBca2bC", "a2cba2CAB"});
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

// Degree-5 cyclic cover, generators p q r s t.
inline Presentation v3093_cover() {
  Presentation p;
  p.name = "v3093.cover5";
  p.generators = {"p", "q", "r", "s", "t"};
  for (const char* r : {"rsQPqrp2qTqSrsPRst", "sPtQPqrpqrpqrTSrsPsP",
                        "QpqTpSQpqSrsPRsPqtRQPR", "sTQpqSrsPRsqSrsPRsqSrsPRstr2"}) {
    p.relators.push_back(p.word(r));
  }
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

// Base generators b x y; cover generators map as p=x, q=y, r=Bxb, s=Byb, t=b^5.
inline std::vector<std::string> v3093_inclusion() { return {"x", "y", "Bxb", "Byb", "b5"}; }

// Degree-2 cyclic cover, generators p q r t.
inline Presentation s594_cover() {
  Presentation p;
  p.name = "s594.cover2";
  p.generators = {"p", "q", "r", "t"};
  for (const char* r : {"RQRtpqpT", "PQPTqPtP", "QPTRtRqP"}) p.relators.push_back(p.word(r));
  p.flags.is_3manifold = p.flags.is_hyperbolic = true;
  return p;
}

// Base generators a c x; p=x, q=c, r=axA, t=a^2.
inline std::vector<std::string> s594_inclusion() { return {"x", "c", "axA", "a2"}; }

// v2869 fibre basis over a..f (found between T and t).
inline std::vector<std::string> v2869_words() {
  return {"F2eBdBaceBabf", "Fef", "FBabFeBAbEceBabf", "F2eBdBaeBadBaCAbDbEf2",
          "F2eBdBacAbDbEFfEbdBabFeBAbEcef", "F2eBdBacAbDbf"};
}
// The fifth word as given does not complete a basis; reading its "Ebd" as
// "EBd" (the BdBa motif of the other words) does.
inline std::vector<std::string> v2869_words_corrected() {
  auto w = v2869_words();
  w[4] = "F2eBdBacAbDbEFfEBdBabFeBAbEcef";
  return w;
}
// a..f in terms of the base generators x y z; t = x^6.
inline std::vector<std::string> v2869_inclusion() {
  return {"y", "z", "xyX", "Xzx", "x2yX2", "x2zX2", "x6"};
}

inline const char* kV3541W = "bDCIjaIhGHicH";
// v3541 fibre basis over a..j, with w and W to be expanded.
inline std::vector<std::string> v3541_words() {
  return {"WJ", "jwJ", "jwfBAweJiCIjaI", "jI", "jEWaJ", "iAJicI", "jbDIjEWabFeWJ",
          "iH", "hFEfBAweJidBAweJ", "hCIhgFEfBAweJidFWJ"};
}
// a..j in terms of x y z; t = z^12.
inline std::vector<std::string> v3541_inclusion() {
  return {"x", "y", "zxZ", "zyZ", "Zxz", "Zyz", "z2xZ2", "Z2yz2", "Z3yz3", "Z4yz4", "z12"};
}

inline std::string expand_w(const std::string& s) {
  const std::string w = kV3541W;
  std::string winv;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const char c = *it;
    winv.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A')
                                        : static_cast<char>(c - 'A' + 'a'));
  }
  std::string out;
  for (char c : s) {
    if (c == 'w') {
      out += w;
    } else if (c == 'W') {
      out += winv;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::vector<Word> parse_all(const std::vector<std::string>& words, const Alphabet& alpha) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(parse_word(w, alpha));
  return out;
}

}  // namespace flab::data
