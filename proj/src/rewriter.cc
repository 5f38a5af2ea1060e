// Copyright 2026 The mgit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgit/rewriter.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "mgit/git_repository.h"
#include "mgit/java_model.h"
#include "mgit/lexer.h"
#include "mgit/process.h"
#include "parallel.h"

namespace mgit {
namespace {

using internal::ParallelFor;
using internal::WorkerCount;

constexpr std::string_view kImportRef = "refs/mgit/import";

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsRegularFile(std::uint32_t mode) {
  return mode == kModeBlob || mode == kModeExecutable;
}

bool IsJavaFile(std::string_view name, std::uint32_t mode) {
  return IsRegularFile(mode) && EndsWith(name, ".java");
}

std::string Join(std::string_view dir, std::string_view name) {
  if (dir.empty()) return std::string(name);
  std::string out(dir);
  out += '/';
  out += name;
  return out;
}

std::string DirName(std::string_view path) {
  const std::size_t slash = path.rfind('/');
  return slash == std::string_view::npos ? "" : std::string(path.substr(0, slash));
}

// Strips "<dir>/" from a path produced by the naming module.
std::string LeafName(std::string path, std::string_view dir) {
  if (!dir.empty()) path.erase(0, dir.size() + 1);
  return path;
}

// C-style quoting as accepted by fast-import for paths.
std::string QuotePath(std::string_view path) {
  bool needs = !path.empty() && path.front() == '"';
  for (char c : path) {
    if (c == '\n' || c == '\\' || c == '"') needs = true;
  }
  if (!needs) return std::string(path);
  std::string out = "\"";
  for (char c : path) {
    switch (c) {
      case '\n':
        out += "\\n";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '"':
        out += "\\\"";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string ModeString(std::uint32_t mode) {
  std::ostringstream os;
  os << std::oct << mode;
  return os.str();
}

// One entry of a converted tree, with an object id already present in (or
// queued for) the destination.
struct OutEntry {
  std::string path;
  std::uint32_t mode = kModeBlob;
  ObjectId id;
};
using OutListing = std::vector<OutEntry>;

struct GeneratedBlob {
  std::string name;  // relative to the .java file's directory
  ObjectId id;
};

struct JavaResult {
  bool ok = false;
  std::vector<GeneratedBlob> files;
};

class Rewriter {
 public:
  Rewriter(GitRepository& src, const std::filesystem::path& dst,
           const ConversionConfig& config, std::ostream* log)
      : src_(src), dst_(dst), config_(config), log_(log) {}

  ConversionStats Run();

 private:
  struct RefTarget {
    std::string name;
    ObjectId commit;
    std::optional<TagRecord> tag;  // annotated tags only
  };

  std::vector<RefTarget> SelectRefs();
  std::string JavaKey(const ObjectId& blob, std::string_view dir) const;
  std::string TreeKey(const ObjectId& tree, std::string_view dir) const;
  void CollectJava(const ObjectId& tree, const std::string& dir,
                   std::unordered_set<std::string>& seen_trees,
                   std::vector<std::pair<ObjectId, std::string>>& out,
                   std::unordered_set<std::string>& seen_java);
  void ConvertAll(const std::vector<std::pair<ObjectId, std::string>>& work);
  const JavaResult& Java(const ObjectId& blob, const std::string& dir);
  std::shared_ptr<const OutListing> Listing(const ObjectId& tree,
                                            const std::string& dir);
  void EnsureBlob(const ObjectId& id);
  void EmitBlob(const ObjectId& id, std::string_view content);
  void Out(std::string_view s) { stream_->Write(s); }
  void EmitData(std::string_view data);
  void Log(const std::string& line) {
    if (log_) *log_ << line << "\n";
  }

  GitRepository& src_;
  std::filesystem::path dst_;
  const ConversionConfig& config_;
  std::ostream* log_;
  std::unique_ptr<Process> stream_;
  std::unordered_set<ObjectId> written_;
  std::unordered_map<std::string, JavaResult> java_cache_;
  std::unordered_map<std::string, std::shared_ptr<const OutListing>> tree_cache_;
  JavaResult scratch_;
  ConversionStats stats_;
};

std::string Rewriter::JavaKey(const ObjectId& blob, std::string_view dir) const {
  if (!config_.name_policy.max_path_bytes) return blob;
  return blob + '\0' + std::string(dir);
}

std::string Rewriter::TreeKey(const ObjectId& tree, std::string_view dir) const {
  if (!config_.name_policy.max_path_bytes) return tree;
  return tree + '\0' + std::string(dir);
}

std::vector<Rewriter::RefTarget> Rewriter::SelectRefs() {
  const auto all = src_.ListRefs();
  std::vector<std::pair<std::string, ObjectId>> chosen;
  if (config_.refs.empty()) {
    for (const auto& [name, id] : all) {
      if (name.starts_with("refs/heads/") || name.starts_with("refs/tags/")) {
        chosen.emplace_back(name, id);
      }
    }
  } else {
    std::set<std::string> names;
    for (const std::string& want : config_.refs) {
      bool found = false;
      for (const std::string& candidate :
           {want, "refs/heads/" + want, "refs/tags/" + want}) {
        for (const auto& [name, id] : all) {
          if (name == candidate) {
            if (names.insert(name).second) chosen.emplace_back(name, id);
            found = true;
          }
        }
        if (found) break;
      }
      if (!found) throw IoError("no such ref: " + want);
    }
    std::sort(chosen.begin(), chosen.end());
  }
  std::vector<RefTarget> targets;
  for (auto& [name, id] : chosen) {
    RefTarget t{name, id, std::nullopt};
    std::string type = src_.ObjectType(id);
    bool first = true;
    while (type == "tag") {
      TagRecord tag = src_.ReadTag(t.commit);
      if (first) t.tag = tag;
      first = false;
      t.commit = tag.object;
      type = src_.ObjectType(t.commit);
    }
    if (type != "commit") {
      Log("skipping " + name + ": points at a " + type);
      continue;
    }
    targets.push_back(std::move(t));
  }
  return targets;
}

void Rewriter::CollectJava(const ObjectId& tree, const std::string& dir,
                           std::unordered_set<std::string>& seen_trees,
                           std::vector<std::pair<ObjectId, std::string>>& out,
                           std::unordered_set<std::string>& seen_java) {
  if (!seen_trees.insert(TreeKey(tree, dir)).second) return;
  const auto entries = src_.ReadTree(tree);
  for (const TreeEntry& e : *entries) {
    if (e.IsTree()) {
      CollectJava(e.id, Join(dir, e.name), seen_trees, out, seen_java);
    } else if (IsJavaFile(e.name, e.mode)) {
      if (seen_java.insert(JavaKey(e.id, dir)).second) {
        out.emplace_back(e.id, dir);
      }
    }
  }
}

void Rewriter::EmitData(std::string_view data) {
  Out("data " + std::to_string(data.size()) + "\n");
  Out(data);
  Out("\n");
}

void Rewriter::EmitBlob(const ObjectId& id, std::string_view content) {
  if (!written_.insert(id).second) return;
  Out("blob\n");
  EmitData(content);
}

void Rewriter::EnsureBlob(const ObjectId& id) {
  if (written_.count(id)) return;
  EmitBlob(id, src_.ReadBlob(id));
}

// Converts java blobs in bounded batches: parallel rendering, then blobs
// written in work-list order so the output stream is deterministic.
void Rewriter::ConvertAll(
    const std::vector<std::pair<ObjectId, std::string>>& work) {
  constexpr std::size_t kBatch = 512;
  const unsigned threads = WorkerCount(config_.threads);
  for (std::size_t begin = 0; begin < work.size(); begin += kBatch) {
    const std::size_t n = std::min(kBatch, work.size() - begin);
    std::vector<JavaConversion> results(n);
    ParallelFor(n, threads, [&](std::size_t i) {
      const auto& [blob, dir] = work[begin + i];
      results[i] = ConvertJavaSource(src_.ReadBlob(blob), config_, dir);
    });
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [blob, dir] = work[begin + i];
      JavaResult r;
      r.ok = results[i].ok;
      if (!r.ok) {
        ++stats_.skipped_files;
        Log("kept unconvertible " + Join(dir, blob) + ": " + results[i].error);
      }
      for (const RenderedFile& f : results[i].files) {
        const ObjectId id = BlobId(f.content);
        EmitBlob(id, f.content);
        r.files.push_back({f.relative_path, id});
        ++stats_.files_emitted;
      }
      java_cache_.emplace(JavaKey(blob, dir), std::move(r));
    }
  }
}

const JavaResult& Rewriter::Java(const ObjectId& blob, const std::string& dir) {
  if (config_.use_blob_cache) {
    auto it = java_cache_.find(JavaKey(blob, dir));
    if (it != java_cache_.end()) return it->second;
  }
  const JavaConversion conv =
      ConvertJavaSource(src_.ReadBlob(blob), config_, dir);
  scratch_ = JavaResult{conv.ok, {}};
  for (const RenderedFile& f : conv.files) {
    const ObjectId id = BlobId(f.content);
    EmitBlob(id, f.content);
    scratch_.files.push_back({f.relative_path, id});
  }
  return scratch_;
}

std::shared_ptr<const OutListing> Rewriter::Listing(const ObjectId& tree,
                                                    const std::string& dir) {
  const std::string key = TreeKey(tree, dir);
  if (config_.use_blob_cache) {
    if (auto it = tree_cache_.find(key); it != tree_cache_.end()) {
      return it->second;
    }
  }
  const auto entries = src_.ReadTree(tree);
  std::set<std::string> subdirs;
  for (const TreeEntry& e : *entries) {
    if (e.IsTree()) subdirs.insert(e.name);
  }
  // Files of this directory: verbatim entries first, generated ones
  // replace them; among generated files the first .java (by name) wins.
  std::map<std::string, OutEntry> files;
  std::set<std::string> generated;
  std::vector<const TreeEntry*> java;
  for (const TreeEntry& e : *entries) {
    if (e.IsTree()) continue;
    if (IsJavaFile(e.name, e.mode)) {
      java.push_back(&e);
    } else if (config_.pass_through_non_java) {
      if (e.mode != kModeGitlink) EnsureBlob(e.id);
      files[e.name] = {e.name, e.mode, e.id};
    }
  }
  std::sort(java.begin(), java.end(),
            [](const TreeEntry* a, const TreeEntry* b) { return a->name < b->name; });
  for (const TreeEntry* e : java) {
    const JavaResult& r = Java(e->id, dir);
    if (!r.ok || config_.keep_original_java) {
      EnsureBlob(e->id);
      if (!generated.count(e->name)) files[e->name] = {e->name, e->mode, e->id};
    }
    for (const GeneratedBlob& g : r.files) {
      if (subdirs.count(g.name) || !generated.insert(g.name).second) {
        Log("name collision in " + (dir.empty() ? "." : dir) + ": " + g.name);
        continue;
      }
      files[g.name] = {g.name, kModeBlob, g.id};
    }
  }
  auto listing = std::make_shared<OutListing>();
  for (auto& [name, entry] : files) listing->push_back(std::move(entry));
  for (const TreeEntry& e : *entries) {
    if (!e.IsTree()) continue;
    const auto sublisting = Listing(e.id, Join(dir, e.name));
    for (const OutEntry& sub : *sublisting) {
      listing->push_back({e.name + "/" + sub.path, sub.mode, sub.id});
    }
  }
  std::sort(listing->begin(), listing->end(),
            [](const OutEntry& a, const OutEntry& b) { return a.path < b.path; });
  if (config_.use_blob_cache) tree_cache_.emplace(key, listing);
  return listing;
}

ConversionStats Rewriter::Run() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<RefTarget> refs = SelectRefs();
  std::vector<ObjectId> tips;
  for (const RefTarget& r : refs) tips.push_back(r.commit);
  const std::vector<ObjectId> order = src_.RevList(tips);

  std::filesystem::create_directories(dst_);
  if (const CommandResult r = RunGit(dst_, {"init", "-q"}); r.exit_code != 0) {
    throw IoError("git init failed: " + r.err);
  }
  if (order.empty()) {
    stats_.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return stats_;
  }

  std::vector<CommitRecord> commits;
  commits.reserve(order.size());
  for (const ObjectId& id : order) commits.push_back(src_.ReadCommit(id));

  const std::filesystem::path marks = dst_ / ".git" / "mgit-marks";
  Process::Options opts;
  opts.cwd = dst_;
  opts.out = Process::Stream::kNull;
  stream_ = std::make_unique<Process>(
      std::vector<std::string>{"git", "fast-import", "--quiet",
                               "--export-marks=" + marks.string()},
      opts);

  try {
    if (config_.use_blob_cache) {
      std::unordered_set<std::string> seen_trees, seen_java;
      std::vector<std::pair<ObjectId, std::string>> work;
      for (const CommitRecord& c : commits) {
        CollectJava(c.tree_id, "", seen_trees, work, seen_java);
      }
      ConvertAll(work);
    }

    std::unordered_map<ObjectId, std::size_t> mark_of;
    std::shared_ptr<const OutListing> prev_listing;
    ObjectId prev_tree;
    const OutListing empty;
    for (std::size_t i = 0; i < commits.size(); ++i) {
      const CommitRecord& c = commits[i];
      const auto listing = Listing(c.tree_id, "");
      std::shared_ptr<const OutListing> base;
      if (!c.parent_ids.empty()) {
        const CommitRecord* parent = nullptr;
        auto it = mark_of.find(c.parent_ids.front());
        if (it == mark_of.end()) {
          throw CorruptRepoError("parent not converted", c.parent_ids.front());
        }
        parent = &commits[it->second - 1];
        base = parent->tree_id == prev_tree && prev_listing
                   ? prev_listing
                   : Listing(parent->tree_id, "");
      }
      const OutListing& old = base ? *base : empty;

      const std::size_t mark = i + 1;
      mark_of[c.id] = mark;
      if (c.parent_ids.empty()) Out("reset " + std::string(kImportRef) + "\n");
      Out("commit " + std::string(kImportRef) + "\n");
      Out("mark :" + std::to_string(mark) + "\n");
      if (!c.author.empty()) Out("author " + c.author + "\n");
      Out("committer " + c.committer + "\n");
      if (!c.encoding.empty()) Out("encoding " + c.encoding + "\n");
      EmitData(c.message);
      for (std::size_t p = 0; p < c.parent_ids.size(); ++p) {
        auto it = mark_of.find(c.parent_ids[p]);
        if (it == mark_of.end()) {
          throw CorruptRepoError("parent not converted", c.parent_ids[p]);
        }
        Out((p == 0 ? "from :" : "merge :") + std::to_string(it->second) +
            "\n");
      }
      // Deletions first so a file replaced by a directory is not clobbered.
      std::size_t a = 0, b = 0;
      std::string deletes, modifies;
      while (a < old.size() || b < listing->size()) {
        if (b == listing->size() ||
            (a < old.size() && old[a].path < (*listing)[b].path)) {
          deletes += "D " + QuotePath(old[a].path) + "\n";
          ++a;
        } else if (a == old.size() || (*listing)[b].path < old[a].path) {
          const OutEntry& e = (*listing)[b++];
          modifies += "M " + ModeString(e.mode) + " " + e.id + " " +
                      QuotePath(e.path) + "\n";
        } else {
          const OutEntry& e = (*listing)[b];
          if (e.mode != old[a].mode || e.id != old[a].id) {
            modifies += "M " + ModeString(e.mode) + " " + e.id + " " +
                        QuotePath(e.path) + "\n";
          }
          ++a;
          ++b;
        }
      }
      Out(deletes);
      Out(modifies);
      Out("\n");
      prev_listing = listing;
      prev_tree = c.tree_id;
      ++stats_.commits;
      if (log_ && (i + 1) % 100 == 0) {
        Log(std::to_string(i + 1) + "/" + std::to_string(commits.size()) +
            " commits");
      }
    }

    for (const RefTarget& r : refs) {
      const std::string from = ":" + std::to_string(mark_of.at(r.commit));
      if (r.tag) {
        Out("tag " + r.name.substr(std::string_view("refs/tags/").size()) +
            "\n");
        Out("from " + from + "\n");
        if (!r.tag->tagger.empty()) Out("tagger " + r.tag->tagger + "\n");
        EmitData(r.tag->message);
      } else {
        Out("reset " + r.name + "\nfrom " + from + "\n\n");
      }
    }
  } catch (...) {
    stream_->Wait();
    throw;
  }
  if (const int status = stream_->Wait(); status != 0) {
    throw IoError("git fast-import failed with status " +
                  std::to_string(status));
  }
  stream_.reset();

  // Commit map from exported marks.
  std::ifstream marks_in(marks);
  std::map<std::size_t, std::string> dst_of;
  std::string line;
  while (std::getline(marks_in, line)) {
    const std::size_t sp = line.find(' ');
    if (line.empty() || line[0] != ':' || sp == std::string::npos) continue;
    dst_of[std::stoull(line.substr(1, sp - 1))] = line.substr(sp + 1);
  }
  marks_in.close();
  std::filesystem::remove(marks);
  std::ofstream map_out(dst_ / ".git" / std::string(kCommitMapFile),
                        std::ios::binary);
  for (std::size_t i = 0; i < commits.size(); ++i) {
    map_out << commits[i].id << '\t' << dst_of[i + 1] << '\n';
  }
  if (!map_out) throw IoError("cannot write commit map");
  map_out.close();

  RunGit(dst_, {"update-ref", "-d", std::string(kImportRef)});

  std::optional<std::string> head;
  const auto src_head = src_.HeadTarget();
  for (const RefTarget& r : refs) {
    if (src_head && r.name == *src_head) head = r.name;
  }
  if (!head) {
    for (const RefTarget& r : refs) {
      if (r.name.starts_with("refs/heads/")) {
        head = r.name;
        break;
      }
    }
  }
  if (head) {
    RunGit(dst_, {"symbolic-ref", "HEAD", *head});
    if (config_.checkout) {
      const CommandResult r = RunGit(dst_, {"reset", "-q", "--hard"});
      if (r.exit_code != 0) throw IoError("checkout failed: " + r.err);
    }
  }

  stats_.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return stats_;
}

}  // namespace

JavaConversion ConvertJavaSource(std::string_view content,
                                 const ConversionConfig& config,
                                 std::string_view directory) {
  JavaConversion out;
  try {
    const ExtractedDecls decls = Extract(content);
    for (const MethodDecl& m : decls.methods) {
      out.files.push_back(
          {LeafName(MethodFileName(m, directory, config.name_policy), directory),
           Render(m, config.render)});
    }
    if (config.emit_fields) {
      for (const FieldDecl& f : decls.fields) {
        out.files.push_back(
            {LeafName(FieldFileName(f, directory, config.name_policy),
                      directory),
             Render(f, config.render)});
      }
    }
    out.ok = true;
  } catch (const LexError& e) {
    out.files.clear();
    out.error = e.what();
  } catch (const ParseError& e) {
    out.files.clear();
    out.error = e.what();
  }
  return out;
}

std::vector<TreeFile> ConvertTree(const std::vector<TreeFile>& files,
                                  const ConversionConfig& config,
                                  std::vector<std::string>* skipped) {
  std::vector<const TreeFile*> sorted;
  for (const TreeFile& f : files) sorted.push_back(&f);
  std::sort(sorted.begin(), sorted.end(),
            [](const TreeFile* a, const TreeFile* b) { return a->path < b->path; });

  std::set<std::string> dirs;
  for (const TreeFile* f : sorted) {
    for (std::string d = DirName(f->path); !d.empty(); d = DirName(d)) {
      dirs.insert(d);
    }
  }
  std::map<std::string, TreeFile> out;
  std::set<std::string> generated;
  std::vector<std::pair<const TreeFile*, JavaConversion>> java;
  for (const TreeFile* f : sorted) {
    const std::string name = f->path.substr(f->path.rfind('/') + 1);
    if (IsJavaFile(name, f->mode)) {
      java.emplace_back(f, ConvertJavaSource(f->content, config,
                                             DirName(f->path)));
    } else if (config.pass_through_non_java) {
      out[f->path] = *f;
    }
  }
  for (auto& [f, conv] : java) {
    if (!conv.ok || config.keep_original_java) {
      if (!generated.count(f->path)) out[f->path] = *f;
      if (!conv.ok && skipped) skipped->push_back(f->path);
    }
    const std::string dir = DirName(f->path);
    for (RenderedFile& r : conv.files) {
      const std::string path = Join(dir, r.relative_path);
      if (dirs.count(path) || !generated.insert(path).second) continue;
      out[path] = {path, kModeBlob, std::move(r.content)};
    }
  }
  std::vector<TreeFile> result;
  for (auto& [path, f] : out) result.push_back(std::move(f));
  return result;
}

std::string ConversionStats::ToJson() const {
  nlohmann::ordered_json j;
  j["commits"] = commits;
  j["filesEmitted"] = files_emitted;
  j["skippedFiles"] = skipped_files;
  j["seconds"] = seconds;
  return j.dump(2);
}

ConversionStats RewriteHistory(const std::filesystem::path& src,
                               const std::filesystem::path& dst,
                               const ConversionConfig& config,
                               std::ostream* log) {
  config.name_policy.Validate();
  std::error_code ec;
  if (std::filesystem::exists(dst, ec)) {
    if (!std::filesystem::is_directory(dst, ec) ||
        !std::filesystem::is_empty(dst, ec)) {
      throw IoError("destination exists and is not empty: " + dst.string());
    }
  }
  auto repo = GitRepository::Open(src);
  Rewriter rewriter(*repo, std::filesystem::absolute(dst), config, log);
  return rewriter.Run();
}

}  // namespace mgit
