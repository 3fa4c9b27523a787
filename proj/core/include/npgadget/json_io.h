#ifndef NPGADGET_JSON_IO_H_
#define NPGADGET_JSON_IO_H_

// JSON encodings of instances, labels and certificates. All numbers are
// integers; map keys (edge ids, variables, coordinates) are decimal strings.
//
//   rst:  {"problem":"rst","num_vertices":n,"edges":[{"id","u","v","w"}],
//          "forbidden":[[id,id],...],"budget":k,"big_weight":M}
//   flow: {"problem":"flow","num_vertices":n,
//          "arcs":[{"id","from","to","cap"}],"source","sink",
//          "all_or_nothing":[id,...],"target":k}
//   vvsp: {"problem":"vvsp","num_vertices":n,"dim":2V,
//          "edges":[{"id","u","v","w":{coord:val}}],"source","target",
//          "budget_sq":k2,"big_weight":M}
//   certificates: {"tree":[id,...]} | {"flow":{id:val}} | {"path":[v,...]}
//
// A vvsp document may give "budget":k instead of "budget_sq"; a fractional
// k is squared and rounded down. Instances may carry "vertex_roles":[name,...]. Readers throw
// Error(kSchemaError) naming the offending location, e.g. "$.edges[3].w".

#include <string>
#include <string_view>

#include "npgadget/certificate.h"
#include "npgadget/flow.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"

namespace npgadget {

enum class ProblemKind { kRst, kFlow, kVvsp };

std::string_view ProblemName(ProblemKind kind);
// Throws Error(kInvalidArgument) for anything but rst, flow, vvsp.
ProblemKind ParseProblemKind(std::string_view name);
// Reads the "problem" member of an instance or labels document.
ProblemKind DetectProblem(std::string_view json_text);

std::string ToJson(const RstInstance& instance);
std::string ToJson(const FlowInstance& instance);
std::string ToJson(const VvspInstance& instance);
std::string ToJson(const RstLabels& labels);
std::string ToJson(const FlowLabels& labels);
std::string ToJson(const VvspLabels& labels);
std::string ToJson(const TreeCertificate& cert);
std::string ToJson(const FlowCertificate& cert);
std::string ToJson(const PathCertificate& cert);

RstInstance RstInstanceFromJson(std::string_view text);
FlowInstance FlowInstanceFromJson(std::string_view text);
VvspInstance VvspInstanceFromJson(std::string_view text);
RstLabels RstLabelsFromJson(std::string_view text);
FlowLabels FlowLabelsFromJson(std::string_view text);
VvspLabels VvspLabelsFromJson(std::string_view text);

// With a context instance, ids outside it are schema errors.
TreeCertificate TreeCertificateFromJson(std::string_view text,
                                        const RstInstance* context = nullptr);
FlowCertificate FlowCertificateFromJson(std::string_view text,
                                        const FlowInstance* context = nullptr);
PathCertificate PathCertificateFromJson(std::string_view text);

}  // namespace npgadget

#endif  // NPGADGET_JSON_IO_H_
