#ifndef NPGADGET_DOT_H_
#define NPGADGET_DOT_H_

// Graphviz output. Heavy tree edges are bold and A-arcs dashed. With labels,
// literal edges show their literal.

#include <string>

#include "npgadget/flow.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"

namespace npgadget {

std::string ToDot(const RstInstance& instance, const RstLabels* labels = nullptr);
std::string ToDot(const FlowInstance& instance, const FlowLabels* labels = nullptr);
std::string ToDot(const VvspInstance& instance, const VvspLabels* labels = nullptr);

}  // namespace npgadget

#endif  // NPGADGET_DOT_H_
