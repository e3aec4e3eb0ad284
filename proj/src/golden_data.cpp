#include "bfi/repro.hpp"

namespace bfi {

// Golden fixture for the three reference tables. Product focals are unions
// of cylinder terms; "left": null stands for the full frame Ω. Cells whose
// printed value disagrees with (or is missing from) the exact recomputation
// carry a status flag and the oracle value.
const char* golden_tables_json() {
  return R"json({
  "frame": ["w1", "w2", "w3"],
  "m1": [
    {"set": ["w1"], "mass": 0.2},
    {"set": ["w1", "w2"], "mass": 0.5},
    {"set": ["w1", "w2", "w3"], "mass": 0.3}
  ],
  "m2": [
    {"set": ["w2"], "mass": 0.1},
    {"set": ["w1", "w2"], "mass": 0.6},
    {"set": ["w1", "w2", "w3"], "mass": 0.3}
  ],
  "table1": {
    "params": {"alpha": 0.95, "beta": 0.05, "gamma": 0.95},
    "cells": [
      {"column": "extended", "terms": [{"left": null, "right": ["I"]}], "printed": 0.0475, "status": "match"},
      {"column": "extended", "terms": [{"left": null, "right": ["P"]}], "printed": 0.8574, "status": "match"},
      {"column": "extended", "terms": [{"left": null, "right": ["~P"]}], "printed": 0.0451, "status": "match"},
      {"column": "extended", "terms": [{"left": null, "right": ["I", "P", "~P"]}], "printed": 0.05, "status": "match"},
      {"column": "cond_i", "terms": [{"left": ["w1"], "right": ["I"]}, {"left": null, "right": ["P", "~P"]}], "printed": 0.2, "status": "match"},
      {"column": "cond_i", "terms": [{"left": ["w1", "w2"], "right": ["I"]}, {"left": null, "right": ["P", "~P"]}], "printed": 0.5, "status": "match"},
      {"column": "cond_i", "terms": [{"left": null, "right": ["I", "P", "~P"]}], "printed": 0.3, "status": "match"},
      {"column": "cond_neg", "terms": [{"left": null, "right": ["I", "P"]}], "printed": 1.0, "oracle": 1.0, "status": "published-typo-suspected",
       "note": "printed against the row Ω×(P∪~P); deconditioning the conflict mass on atom ~P yields Ω×(I∪P)"},
      {"column": "combined", "terms": [], "printed": 0.0451, "status": "match"},
      {"column": "combined", "terms": [{"left": ["w1"], "right": ["I"]}], "printed": 0.0095, "status": "match"},
      {"column": "combined", "terms": [{"left": ["w1", "w2"], "right": ["I"]}], "printed": 0.0237, "status": "match"},
      {"column": "combined", "terms": [{"left": null, "right": ["I"]}], "printed": 0.0142, "status": "match"},
      {"column": "combined", "terms": [{"left": null, "right": ["P"]}], "printed": 0.8574, "status": "match"},
      {"column": "combined", "terms": [{"left": ["w1"], "right": ["I"]}, {"left": null, "right": ["P"]}], "printed": 0.01, "status": "match"},
      {"column": "combined", "terms": [{"left": ["w1", "w2"], "right": ["I"]}, {"left": null, "right": ["P"]}], "printed": 0.025, "status": "match"},
      {"column": "combined", "terms": [{"left": null, "right": ["I", "P"]}], "printed": null, "oracle": 0.015, "status": "published-omission",
       "note": "row missing from the published table; the column only sums to 1 with it"}
    ]
  },
  "table2": {
    "params": {"alpha": 0.95, "beta": 0.05, "gamma": 0.95},
    "cells": [
      {"column": "marginal", "set": [], "printed": 0.0451, "status": "match"},
      {"column": "marginal", "set": ["w1"], "printed": 0.0095, "status": "match"},
      {"column": "marginal", "set": ["w1", "w2"], "printed": 0.0237, "status": "match"},
      {"column": "marginal", "set": ["w1", "w2", "w3"], "printed": 0.9216, "status": "match"},
      {"column": "m2", "set": ["w2"], "printed": 0.1, "status": "match"},
      {"column": "m2", "set": ["w1", "w2"], "printed": 0.6, "status": "match"},
      {"column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.3, "status": "match"},
      {"column": "fused", "set": [], "printed": 0.0461, "status": "match"},
      {"column": "fused", "set": ["w1"], "printed": 0.0085, "status": "match"},
      {"column": "fused", "set": ["w2"], "printed": 0.0945, "status": "match"},
      {"column": "fused", "set": ["w1", "w2"], "printed": 0.5743, "status": "match"},
      {"column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.2765, "status": "match"}
    ]
  },
  "table3": {
    "s1_alpha": 0.95,
    "s2_alpha": 0.9,
    "s1_cases": [
      {"beta": 0.95, "gamma": 0.05},
      {"beta": 0.05, "gamma": 0.95},
      {"beta": 0.05, "gamma": 0.05}
    ],
    "s2_cases": [
      {"beta": 0.9, "gamma": 0.1},
      {"beta": 0.1, "gamma": 0.9},
      {"beta": 0.1, "gamma": 0.1}
    ],
    "cells": [
      {"s1": 0, "column": "m1", "set": [], "printed": 0.0451, "status": "match"},
      {"s1": 0, "column": "m1", "set": ["w1"], "printed": 0.1805, "status": "match"},
      {"s1": 0, "column": "m1", "set": ["w1", "w2"], "printed": 0.4513, "status": "match"},
      {"s1": 0, "column": "m1", "set": ["w1", "w2", "w3"], "printed": 0.3231, "status": "match"},
      {"s1": 1, "column": "m1", "set": [], "printed": 0.0451, "status": "match"},
      {"s1": 1, "column": "m1", "set": ["w1"], "printed": 0.0095, "status": "match"},
      {"s1": 1, "column": "m1", "set": ["w1", "w2"], "printed": 0.0238, "status": "match"},
      {"s1": 1, "column": "m1", "set": ["w1", "w2", "w3"], "printed": 0.9216, "status": "match"},
      {"s1": 2, "column": "m1", "set": [], "printed": 0.8574, "status": "match"},
      {"s1": 2, "column": "m1", "set": ["w1"], "printed": 0.0095, "status": "match"},
      {"s1": 2, "column": "m1", "set": ["w1", "w2"], "printed": 0.0237, "status": "match"},
      {"s1": 2, "column": "m1", "set": ["w1", "w2", "w3"], "printed": 0.1094, "status": "match"},

      {"s1": 0, "s2": 0, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 0, "s2": 0, "column": "m2", "set": ["w2"], "printed": 0.081, "status": "match"},
      {"s1": 0, "s2": 0, "column": "m2", "set": ["w1", "w2"], "printed": 0.486, "status": "match"},
      {"s1": 0, "s2": 0, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.352, "status": "match"},
      {"s1": 0, "s2": 1, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 0, "s2": 1, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 0, "s2": 1, "column": "m2", "set": ["w1", "w2"], "printed": 0.054, "status": "match"},
      {"s1": 0, "s2": 1, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.856, "status": "match"},
      {"s1": 0, "s2": 2, "column": "m2", "set": [], "printed": 0.729, "status": "match"},
      {"s1": 0, "s2": 2, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 0, "s2": 2, "column": "m2", "set": ["w1", "w2"], "printed": 0.054, "status": "match"},
      {"s1": 0, "s2": 2, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.208, "status": "match"},
      {"s1": 1, "s2": 0, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 1, "s2": 0, "column": "m2", "set": ["w2"], "printed": 0.081, "status": "match"},
      {"s1": 1, "s2": 0, "column": "m2", "set": ["w1", "w2"], "printed": 0.486, "status": "match"},
      {"s1": 1, "s2": 0, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.352, "status": "match"},
      {"s1": 1, "s2": 1, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 1, "s2": 1, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 1, "s2": 1, "column": "m2", "set": ["w1", "w2"], "printed": 0.0054, "oracle": 0.054, "status": "published-typo-suspected",
       "note": "printed 0.0054 where the recomputation gives 0.054 (same cell prints 0.054 in the other blocks)"},
      {"s1": 1, "s2": 1, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.856, "status": "match"},
      {"s1": 1, "s2": 2, "column": "m2", "set": [], "printed": 0.729, "status": "match"},
      {"s1": 1, "s2": 2, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 1, "s2": 2, "column": "m2", "set": ["w1", "w2"], "printed": 0.054, "status": "match"},
      {"s1": 1, "s2": 2, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.208, "status": "match"},
      {"s1": 2, "s2": 0, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 2, "s2": 0, "column": "m2", "set": ["w2"], "printed": 0.081, "status": "match"},
      {"s1": 2, "s2": 0, "column": "m2", "set": ["w1", "w2"], "printed": 0.486, "status": "match"},
      {"s1": 2, "s2": 0, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.352, "status": "match"},
      {"s1": 2, "s2": 1, "column": "m2", "set": [], "printed": 0.081, "status": "match"},
      {"s1": 2, "s2": 1, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 2, "s2": 1, "column": "m2", "set": ["w1", "w2"], "printed": 0.054, "status": "match"},
      {"s1": 2, "s2": 1, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.856, "status": "match"},
      {"s1": 2, "s2": 2, "column": "m2", "set": [], "printed": 0.729, "status": "match"},
      {"s1": 2, "s2": 2, "column": "m2", "set": ["w2"], "printed": 0.009, "status": "match"},
      {"s1": 2, "s2": 2, "column": "m2", "set": ["w1", "w2"], "printed": 0.054, "status": "match"},
      {"s1": 2, "s2": 2, "column": "m2", "set": ["w1", "w2", "w3"], "printed": 0.208, "status": "match"},

      {"s1": 0, "s2": 0, "column": "fused", "set": [], "printed": 0.1371, "status": "match"},
      {"s1": 0, "s2": 0, "column": "fused", "set": ["w1"], "printed": 0.1513, "status": "match"},
      {"s1": 0, "s2": 0, "column": "fused", "set": ["w2"], "printed": 0.0627, "status": "match"},
      {"s1": 0, "s2": 0, "column": "fused", "set": ["w1", "w2"], "printed": 0.5352, "status": "match"},
      {"s1": 0, "s2": 0, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.1137, "status": "match"},
      {"s1": 0, "s2": 1, "column": "fused", "set": [], "printed": 0.124, "status": "match"},
      {"s1": 0, "s2": 1, "column": "fused", "set": ["w1"], "printed": 0.1643, "status": "match"},
      {"s1": 0, "s2": 1, "column": "fused", "set": ["w2"], "printed": 0.007, "status": "match"},
      {"s1": 0, "s2": 1, "column": "fused", "set": ["w1", "w2"], "printed": 0.4281, "status": "match"},
      {"s1": 0, "s2": 1, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.2766, "status": "match"},
      {"s1": 0, "s2": 2, "column": "fused", "set": [], "printed": 0.7428, "status": "match"},
      {"s1": 0, "s2": 2, "column": "fused", "set": ["w1"], "printed": 0.0473, "status": "match"},
      {"s1": 0, "s2": 2, "column": "fused", "set": ["w2"], "printed": 0.007, "status": "match"},
      {"s1": 0, "s2": 2, "column": "fused", "set": ["w1", "w2"], "printed": 0.1357, "status": "match"},
      {"s1": 0, "s2": 2, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.0672, "status": "match"},
      {"s1": 1, "s2": 0, "column": "fused", "set": [], "printed": 0.1232, "status": "match"},
      {"s1": 1, "s2": 0, "column": "fused", "set": ["w1"], "printed": 0.008, "status": "match"},
      {"s1": 1, "s2": 0, "column": "fused", "set": ["w2"], "printed": 0.0766, "status": "match"},
      {"s1": 1, "s2": 0, "column": "fused", "set": ["w1", "w2"], "printed": 0.4678, "status": "match"},
      {"s1": 1, "s2": 0, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.3244, "status": "match"},
      {"s1": 1, "s2": 1, "column": "fused", "set": [], "printed": 0.1226, "status": "match"},
      {"s1": 1, "s2": 1, "column": "fused", "set": ["w1"], "printed": 0.0086, "status": "match"},
      {"s1": 1, "s2": 1, "column": "fused", "set": ["w2"], "printed": 0.0085, "status": "match"},
      {"s1": 1, "s2": 1, "column": "fused", "set": ["w1", "w2"], "printed": 0.0714, "status": "match"},
      {"s1": 1, "s2": 1, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.7889, "status": "match"},
      {"s1": 1, "s2": 2, "column": "fused", "set": [], "printed": 0.7413, "status": "match"},
      {"s1": 1, "s2": 2, "column": "fused", "set": ["w1"], "printed": 0.0025, "status": "match"},
      {"s1": 1, "s2": 2, "column": "fused", "set": ["w2"], "printed": 0.0085, "status": "match"},
      {"s1": 1, "s2": 2, "column": "fused", "set": ["w1", "w2"], "printed": 0.056, "status": "match"},
      {"s1": 1, "s2": 2, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.1917, "status": "match"},
      {"s1": 2, "s2": 0, "column": "fused", "set": [], "printed": 0.8697, "status": "match"},
      {"s1": 2, "s2": 0, "column": "fused", "set": ["w1"], "printed": 0.008, "status": "match"},
      {"s1": 2, "s2": 0, "column": "fused", "set": ["w2"], "printed": 0.0108, "status": "match"},
      {"s1": 2, "s2": 0, "column": "fused", "set": ["w1", "w2"], "printed": 0.073, "status": "match"},
      {"s1": 2, "s2": 0, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.0385, "status": "match"},
      {"s1": 2, "s2": 1, "column": "fused", "set": [], "printed": 0.869, "status": "match"},
      {"s1": 2, "s2": 1, "column": "fused", "set": ["w1"], "printed": 0.0087, "status": "match"},
      {"s1": 2, "s2": 1, "column": "fused", "set": ["w2"], "printed": 0.0012, "status": "match"},
      {"s1": 2, "s2": 1, "column": "fused", "set": ["w1", "w2"], "printed": 0.0275, "status": "match"},
      {"s1": 2, "s2": 1, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.0936, "status": "match"},
      {"s1": 2, "s2": 2, "column": "fused", "set": [], "printed": 0.9614, "status": "match"},
      {"s1": 2, "s2": 2, "column": "fused", "set": ["w1"], "printed": 0.0025, "status": "match"},
      {"s1": 2, "s2": 2, "column": "fused", "set": ["w2"], "printed": 0.0012, "status": "match"},
      {"s1": 2, "s2": 2, "column": "fused", "set": ["w1", "w2"], "printed": 0.0121, "status": "match"},
      {"s1": 2, "s2": 2, "column": "fused", "set": ["w1", "w2", "w3"], "printed": 0.0228, "status": "match"}
    ]
  }
})json";
}

}  // namespace bfi
