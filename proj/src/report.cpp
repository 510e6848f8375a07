#include "ndorgs/report.hpp"

#include <algorithm>
#include <sstream>

#include "ndorgs/errors.hpp"
#include "ndorgs/topics.hpp"

namespace ndorgs {

namespace {

std::string text_for(const std::map<std::string, std::string>& texts,
                     const std::string& cluster_id) {
  auto it = texts.find(cluster_id);
  if (it == texts.end() || it->second.empty()) {
    throw Error("assemble_report: missing summary text for cluster " + cluster_id);
  }
  return it->second;
}

std::string title_for(const std::map<std::string, std::string>& titles,
                      const std::string& cluster_id) {
  auto it = titles.find(cluster_id);
  if (it == titles.end() || it->second.empty()) {
    throw Error("assemble_report: missing title for cluster " + cluster_id);
  }
  return it->second;
}

// Merged text of every nonempty leaf under the node, children first by
// score descending.
std::string merged_leaf_text(const ClusterNode& node,
                             const std::map<std::string, std::string>& texts) {
  if (node.leaf()) return text_for(texts, node.id);
  std::vector<const ClusterNode*> children;
  for (const auto& child : node.children) {
    if (!child.empty()) children.push_back(&child);
  }
  std::stable_sort(children.begin(), children.end(),
                   [](const ClusterNode* a, const ClusterNode* b) {
                     return a->score > b->score;
                   });
  std::string merged;
  for (const ClusterNode* child : children) {
    if (!merged.empty()) merged.push_back(' ');
    merged += text_for(texts, child->id);
  }
  if (merged.empty()) {
    throw Error("assemble_report: cluster " + node.id + " has no summarized children");
  }
  return merged;
}

std::string format_double(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

Report assemble_report(const ClusterTree& tree,
                       const std::map<std::string, std::string>& texts,
                       const std::map<std::string, std::string>& titles,
                       int minor_threshold, const ReportMeta& meta) {
  Report report;
  report.meta = meta;
  report.title = meta.corpus_name.empty() ? "Corpus Overview"
                                          : meta.corpus_name + " Overview";
  for (const ClusterNode& root : tree.roots) {
    if (root.empty()) continue;
    int size = static_cast<int>(root.member_ids.size());
    if (size < minor_threshold) {
      // Minor first-level topic: the whole subtree becomes one bullet.
      ReportBullet bullet;
      bullet.cluster_id = root.id;
      bullet.title = title_for(titles, root.id);
      bullet.score = root.score;
      bullet.text = merged_leaf_text(root, texts);
      bullet.member_ids = root.member_ids;
      report.other_topics.push_back(std::move(bullet));
      continue;
    }
    ReportSection section;
    section.cluster_id = root.id;
    section.title = title_for(titles, root.id);
    section.level = 1;
    section.score = root.score;
    section.member_ids = root.member_ids;
    if (root.leaf()) {
      section.body = text_for(texts, root.id);
    } else {
      std::vector<const ClusterNode*> majors;
      std::vector<const ClusterNode*> minors;
      for (const auto& child : root.children) {
        if (child.empty()) continue;
        if (static_cast<int>(child.member_ids.size()) < minor_threshold) {
          minors.push_back(&child);
        } else {
          majors.push_back(&child);
        }
      }
      if (majors.empty()) {
        // All children minor: fold their text into the parent section body.
        section.body = merged_leaf_text(root, texts);
      } else {
        std::stable_sort(majors.begin(), majors.end(),
                         [](const ClusterNode* a, const ClusterNode* b) {
                           return a->score > b->score;
                         });
        for (const ClusterNode* child : majors) {
          ReportSection sub;
          sub.cluster_id = child->id;
          sub.title = title_for(titles, child->id);
          sub.level = 2;
          sub.score = child->score;
          sub.body = text_for(texts, child->id);
          sub.member_ids = child->member_ids;
          section.subsections.push_back(std::move(sub));
        }
        for (const ClusterNode* child : minors) {
          ReportBullet bullet;
          bullet.cluster_id = child->id;
          bullet.title = title_for(titles, child->id);
          bullet.score = child->score;
          bullet.text = text_for(texts, child->id);
          bullet.member_ids = child->member_ids;
          report.other_topics.push_back(std::move(bullet));
        }
      }
    }
    report.sections.push_back(std::move(section));
  }
  std::stable_sort(report.sections.begin(), report.sections.end(),
                   [](const ReportSection& a, const ReportSection& b) {
                     return a.score > b.score;
                   });
  std::stable_sort(report.other_topics.begin(), report.other_topics.end(),
                   [](const ReportBullet& a, const ReportBullet& b) {
                     return a.score > b.score;
                   });
  return report;
}

std::string render_markdown(const Report& report) {
  std::string out;
  out += "# " + report.title + "\n\n";
  out += "- Corpus: " + report.meta.corpus_name + "\n";
  out += "- Summary ratio: " + format_double(report.meta.lambda) + "\n";
  out += "- Clusters: " + std::to_string(report.meta.k) + "\n";
  out += "- Subdivision threshold: " + std::to_string(report.meta.n) + "\n";
  out += "- Seed: " + std::to_string(report.meta.seed) + "\n";
  for (const ReportSection& section : report.sections) {
    out += "\n## " + section.title + "\n";
    if (!section.body.empty()) {
      out += "\n" + section.body + "\n";
    }
    for (const ReportSection& sub : section.subsections) {
      out += "\n### " + sub.title + "\n";
      out += "\n" + sub.body + "\n";
    }
  }
  if (!report.other_topics.empty()) {
    out += "\n## Other Topics\n\n";
    for (const ReportBullet& bullet : report.other_topics) {
      out += "- **" + bullet.title + "**: " + bullet.text + "\n";
    }
  }
  return out;
}

}  // namespace ndorgs
