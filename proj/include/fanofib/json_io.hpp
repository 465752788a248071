#pragma once

#include "fanofib/ledger.hpp"

#include <string>

namespace fanofib::io {

// JSON schema for graphs:
//   {"vertices":[{"codim":4,"mu":2,"in_fiber":true},...],
//    "arrows":[[2,1],[3,1],...]}
// and for ledgers:
//   {"graph":{...},
//    "m_y":{"1":"3/2",...}, "m_yf":{...}, "d":{...},
//    "cross":[{"from_level":1,"at_level":2,"value":"1/2"},...]}
// Rationals travel as canonical "p/q" strings.

std::string graph_to_json(const maxsing::ResolutionGraph& g);
maxsing::ResolutionGraph graph_from_json(const std::string& text);

std::string ledger_to_json(const maxsing::MultiplicityLedger& led);
maxsing::MultiplicityLedger ledger_from_json(const std::string& text);

}  // namespace fanofib::io
