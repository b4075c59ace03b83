#include "coreval/graph_export.hpp"

#include <ostream>
#include <string>

namespace coreval {
namespace {

std::string xml_escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dot_quote(std::string_view s)
{
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_graphml(std::ostream& out, const InteractionGraph& g, Orientation orientation)
{
    const auto orientation_name = to_string(orientation);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"orientation\" for=\"node\" attr.name=\"orientation\" attr.type=\"string\"/>\n"
        << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
        << "  <key id=\"kind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
        << "  <key id=\"timestamp\" for=\"edge\" attr.name=\"timestamp\" attr.type=\"string\"/>\n"
        << "  <graph id=\"" << orientation_name << "\" edgedefault=\"directed\">\n";
    const auto nodes = g.nodes();
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        out << "    <node id=\"" << xml_escape(nodes[v]) << "\">"
            << "<data key=\"orientation\">" << orientation_name << "</data>"
            << "<data key=\"degree\">" << g.degree(NodeId(v)) << "</data></node>\n";
    }
    std::size_t index = 0;
    for (const auto& arc : g.arcs()) {
        out << "    <edge id=\"e" << index++ << "\" source=\"" << xml_escape(nodes[arc.source]) << "\" target=\""
            << xml_escape(nodes[arc.target]) << "\">"
            << "<data key=\"kind\">" << to_string(arc.kind) << "</data>"
            << "<data key=\"timestamp\">" << format_rfc3339(arc.time) << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const InteractionGraph& g, Orientation orientation)
{
    const auto orientation_name = to_string(orientation);
    out << "digraph " << dot_quote(orientation_name) << " {\n";
    const auto nodes = g.nodes();
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        out << "  " << dot_quote(nodes[v]) << " [orientation=" << dot_quote(orientation_name)
            << ", degree=" << g.degree(NodeId(v)) << "];\n";
    }
    for (const auto& arc : g.arcs()) {
        out << "  " << dot_quote(nodes[arc.source]) << " -> " << dot_quote(nodes[arc.target])
            << " [kind=" << dot_quote(to_string(arc.kind)) << ", timestamp=" << dot_quote(format_rfc3339(arc.time))
            << "];\n";
    }
    out << "}\n";
}

} // namespace coreval
