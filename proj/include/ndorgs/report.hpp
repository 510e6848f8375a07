// Report assembly: the cluster tree, section summaries and titles become a
// multilevel Markdown report with a bullet list for minor topics.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ndorgs {

struct ReportSection {
  std::string cluster_id;
  std::string title;
  int level = 1;  // 1 renders as H2, 2 as H3
  double score = 0.0;
  std::string body;  // empty for level-1 sections with subsections
  std::vector<ReportSection> subsections;
  std::vector<std::string> member_ids;
};

struct ReportBullet {
  std::string cluster_id;
  std::string title;
  double score = 0.0;
  std::string text;
  std::vector<std::string> member_ids;
};

struct ReportMeta {
  std::string corpus_name;
  double lambda = 0.0;
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
};

struct Report {
  std::string title;
  ReportMeta meta;
  std::vector<ReportSection> sections;   // score descending
  std::vector<ReportBullet> other_topics;  // score descending
};

struct ClusterTree;

// Builds the report. Nonempty clusters smaller than `minor_threshold`
// become bullets under "Other Topics"; a minor first-level cluster absorbs
// its subtree into one bullet, and a major first-level cluster whose
// children are all minor becomes a single section with their merged text.
// Every nonempty leaf must have a summary in `texts`, and every rendered
// node a title in `titles`, keyed by cluster id.
Report assemble_report(const ClusterTree& tree,
                       const std::map<std::string, std::string>& texts,
                       const std::map<std::string, std::string>& titles,
                       int minor_threshold, const ReportMeta& meta);

// Deterministic Markdown: same report, same bytes.
std::string render_markdown(const Report& report);

}  // namespace ndorgs
