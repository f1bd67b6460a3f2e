#pragma once

// Serializers for the course graph and the semester network. Output is
// deterministic: nodes and edges are emitted in graph order and numbers go
// through one snprintf format, so identical inputs give identical bytes.

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "coursenet/course_graph.hpp"
#include "coursenet/errors.hpp"
#include "coursenet/semester_network.hpp"

namespace coursenet {

enum class ExportFormat { graphml, gexf, dot };

inline ExportFormat parse_export_format(const std::string& s) {
    if (s == "graphml") return ExportFormat::graphml;
    if (s == "gexf") return ExportFormat::gexf;
    if (s == "dot") return ExportFormat::dot;
    throw InputError("unknown export format '" + s +
                     "' (expected graphml, gexf, or dot)");
}

inline std::string export_format_extension(ExportFormat f) {
    switch (f) {
        case ExportFormat::graphml: return ".graphml";
        case ExportFormat::gexf: return ".gexf";
        case ExportFormat::dot: return ".dot";
    }
    throw ComputeError("export_format_extension: unhandled format");
}

// Community id and hub flags to attach to nodes; courses absent from
// `community` get -1 (hubs removed before clustering end up there).
struct NodeAnnotations {
    std::map<std::string, int> community;
    std::set<std::string> hubs;
};

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
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

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline int community_of(const NodeAnnotations* ann, const std::string& id) {
    if (!ann) return -1;
    const auto it = ann->community.find(id);
    return it == ann->community.end() ? -1 : it->second;
}

inline bool is_hub(const NodeAnnotations* ann, const std::string& id) {
    return ann && ann->hubs.count(id) > 0;
}

}  // namespace detail

inline void export_course_graphml(std::ostream& os, const CourseGraph& g,
                                  const NodeAnnotations* ann = nullptr) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
       << "  <key id=\"strength\" for=\"node\" attr.name=\"strength\" attr.type=\"double\"/>\n"
       << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
       << "  <key id=\"is_hub\" for=\"node\" attr.name=\"is_hub\" attr.type=\"boolean\"/>\n"
       << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
       << "  <graph id=\"courses\" edgedefault=\"undirected\">\n";
    for (int v = 0; v < g.node_count(); ++v) {
        const std::string id = detail::xml_escape(g.node_id(v));
        os << "    <node id=\"" << id << "\">\n"
           << "      <data key=\"label\">" << id << "</data>\n"
           << "      <data key=\"strength\">" << detail::fmt_double(g.strength(v))
           << "</data>\n"
           << "      <data key=\"community\">"
           << detail::community_of(ann, g.node_id(v)) << "</data>\n"
           << "      <data key=\"is_hub\">"
           << (detail::is_hub(ann, g.node_id(v)) ? "true" : "false")
           << "</data>\n"
           << "    </node>\n";
    }
    for (int v = 0; v < g.node_count(); ++v) {
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u <= v) continue;
            os << "    <edge source=\"" << detail::xml_escape(g.node_id(v))
               << "\" target=\"" << detail::xml_escape(g.node_id(u)) << "\">"
               << "<data key=\"weight\">" << detail::fmt_double(w)
               << "</data></edge>\n";
        }
    }
    os << "  </graph>\n</graphml>\n";
}

inline void export_course_gexf(std::ostream& os, const CourseGraph& g,
                               const NodeAnnotations* ann = nullptr) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
       << "  <graph defaultedgetype=\"undirected\">\n"
       << "    <attributes class=\"node\">\n"
       << "      <attribute id=\"0\" title=\"strength\" type=\"double\"/>\n"
       << "      <attribute id=\"1\" title=\"community\" type=\"integer\"/>\n"
       << "      <attribute id=\"2\" title=\"is_hub\" type=\"boolean\"/>\n"
       << "    </attributes>\n"
       << "    <nodes>\n";
    for (int v = 0; v < g.node_count(); ++v) {
        const std::string id = detail::xml_escape(g.node_id(v));
        os << "      <node id=\"" << id << "\" label=\"" << id << "\">\n"
           << "        <attvalues>\n"
           << "          <attvalue for=\"0\" value=\""
           << detail::fmt_double(g.strength(v)) << "\"/>\n"
           << "          <attvalue for=\"1\" value=\""
           << detail::community_of(ann, g.node_id(v)) << "\"/>\n"
           << "          <attvalue for=\"2\" value=\""
           << (detail::is_hub(ann, g.node_id(v)) ? "true" : "false")
           << "\"/>\n"
           << "        </attvalues>\n"
           << "      </node>\n";
    }
    os << "    </nodes>\n    <edges>\n";
    int edge_id = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u <= v) continue;
            os << "      <edge id=\"" << edge_id++ << "\" source=\""
               << detail::xml_escape(g.node_id(v)) << "\" target=\""
               << detail::xml_escape(g.node_id(u)) << "\" weight=\""
               << detail::fmt_double(w) << "\"/>\n";
        }
    }
    os << "    </edges>\n  </graph>\n</gexf>\n";
}

inline void export_course_dot(std::ostream& os, const CourseGraph& g,
                              const NodeAnnotations* ann = nullptr) {
    os << "graph courses {\n";
    for (int v = 0; v < g.node_count(); ++v) {
        os << "  " << detail::dot_quote(g.node_id(v)) << " [strength="
           << detail::fmt_double(g.strength(v))
           << " community=" << detail::community_of(ann, g.node_id(v))
           << " is_hub=" << (detail::is_hub(ann, g.node_id(v)) ? "true" : "false")
           << "];\n";
    }
    for (int v = 0; v < g.node_count(); ++v) {
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u <= v) continue;
            os << "  " << detail::dot_quote(g.node_id(v)) << " -- "
               << detail::dot_quote(g.node_id(u)) << " [weight="
               << detail::fmt_double(w) << "];\n";
        }
    }
    os << "}\n";
}

inline void export_course_graph(std::ostream& os, const CourseGraph& g,
                                ExportFormat format,
                                const NodeAnnotations* ann = nullptr) {
    switch (format) {
        case ExportFormat::graphml: export_course_graphml(os, g, ann); break;
        case ExportFormat::gexf: export_course_gexf(os, g, ann); break;
        case ExportFormat::dot: export_course_dot(os, g, ann); break;
    }
}

inline void export_graph(const std::string& path,
                                     const CourseGraph& g, ExportFormat format,
                                     const NodeAnnotations* ann = nullptr) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw InputError("cannot open '" + path + "' for writing");
    export_course_graph(os, g, format, ann);
    if (!os) throw ComputeError("write failed for '" + path + "'");
}

namespace detail {

inline std::string semester_node_id(int index) {
    return "n" + std::to_string(index);
}

inline std::string join_courses(const std::vector<std::string>& courses) {
    std::string out;
    for (const auto& c : courses) {
        if (!out.empty()) out += '+';
        out += c;
    }
    return out;
}

}  // namespace detail

inline void export_semester_graphml(std::ostream& os,
                                    const SemesterNetwork& net) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
       << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
       << "  <key id=\"ordinal\" for=\"node\" attr.name=\"ordinal\" attr.type=\"int\"/>\n"
       << "  <key id=\"students\" for=\"node\" attr.name=\"students\" attr.type=\"int\"/>\n"
       << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
       << "  <graph id=\"semesters\" edgedefault=\"directed\">\n";
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        const auto& node = net.nodes[i];
        os << "    <node id=\"" << detail::semester_node_id(static_cast<int>(i))
           << "\">\n"
           << "      <data key=\"label\">"
           << detail::xml_escape(detail::join_courses(node.courses))
           << "</data>\n"
           << "      <data key=\"ordinal\">" << node.ordinal << "</data>\n"
           << "      <data key=\"students\">" << node.student_count
           << "</data>\n"
           << "    </node>\n";
    }
    for (const auto& e : net.edges) {
        os << "    <edge source=\"" << detail::semester_node_id(e.from)
           << "\" target=\"" << detail::semester_node_id(e.to) << "\">"
           << "<data key=\"weight\">" << e.weight << "</data></edge>\n";
    }
    os << "  </graph>\n</graphml>\n";
}

// Layered drawing: same-ordinal nodes share a rank so semesters line up as
// columns under dot's default left-to-right rank flow.
inline void export_semester_dot(std::ostream& os, const SemesterNetwork& net) {
    os << "digraph semesters {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        const auto& node = net.nodes[i];
        os << "  " << detail::semester_node_id(static_cast<int>(i))
           << " [label="
           << detail::dot_quote(detail::join_courses(node.courses) + "\\n" +
                                std::to_string(node.student_count))
           << "];\n";
    }
    int ordinal = 0;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (net.nodes[i].ordinal != ordinal) {
            if (ordinal != 0) os << " }\n";
            ordinal = net.nodes[i].ordinal;
            os << "  { rank=same;";
        }
        os << ' ' << detail::semester_node_id(static_cast<int>(i)) << ';';
    }
    if (ordinal != 0) os << " }\n";
    for (const auto& e : net.edges) {
        os << "  " << detail::semester_node_id(e.from) << " -> "
           << detail::semester_node_id(e.to) << " [weight=" << e.weight
           << " label=\"" << e.weight << "\"];\n";
    }
    os << "}\n";
}

inline void write_share_series_csv(std::ostream& os,
                                   const std::vector<SemesterShare>& shares) {
    os << "ordinal,top_count,total_count,share\n";
    for (const auto& s : shares) {
        os << s.ordinal << ',' << s.top_count << ',' << s.total_count << ','
           << detail::fmt_double(s.share) << '\n';
    }
}

}  // namespace coursenet
