#ifndef LVR_CAPS_HPP
#define LVR_CAPS_HPP

namespace lvr {

// Resource caps.  Defaults keep every exact computation interactive; each can
// be raised per call site or globally through the LVR_CAPS environment
// variable, e.g. LVR_CAPS="sym=9,wg=7,faa=8,wick=9,ribbon=14,kmax=3".
struct Caps {
  int symmetric_group = 8;   // max k for S_k enumeration
  int weingarten_k = 7;      // max order of Weingarten / Haar moments
  int faa = 8;               // max q + qbar in corner differentiation
  int wick_pairs = 7;        // max M count in a Wick query after expansion
  int ribbon_pairs = 12;     // max half-edge pairs p*v + K in one graph
  int kmax = 3;              // max cumulant order K
};

// Process-wide caps, read once from the environment.
const Caps& caps();

}  // namespace lvr

#endif
