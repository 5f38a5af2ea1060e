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

#include "mgit/git_repository.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <sstream>

namespace mgit {
namespace {

std::string Trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string ToHex(const unsigned char* data, std::size_t n) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    out += kHex[data[i] >> 4];
    out += kHex[data[i] & 0xf];
  }
  return out;
}

// Splits "header\n...\n\nmessage" into header lines (continuations folded)
// and the message.
std::pair<std::vector<std::pair<std::string, std::string>>, std::string>
SplitHeaders(const std::string& body) {
  std::vector<std::pair<std::string, std::string>> headers;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t nl = body.find('\n', pos);
    if (nl == std::string::npos) nl = body.size();
    if (nl == pos) {
      return {headers, body.substr(std::min(body.size(), nl + 1))};
    }
    const std::string line = body.substr(pos, nl - pos);
    if (line[0] == ' ' && !headers.empty()) {
      headers.back().second += "\n" + line.substr(1);
    } else {
      const std::size_t sp = line.find(' ');
      headers.emplace_back(line.substr(0, sp),
                           sp == std::string::npos ? "" : line.substr(sp + 1));
    }
    pos = nl + 1;
  }
  return {headers, ""};
}

}  // namespace

Signature ParseSignature(std::string_view raw) {
  Signature sig;
  const std::size_t lt = raw.find('<');
  const std::size_t gt = raw.rfind('>');
  if (lt == std::string_view::npos || gt == std::string_view::npos || gt < lt) {
    sig.name = std::string(raw);
    return sig;
  }
  std::string_view name = raw.substr(0, lt);
  while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
  sig.name = std::string(name);
  sig.email = std::string(raw.substr(lt + 1, gt - lt - 1));
  std::istringstream rest{std::string(raw.substr(gt + 1))};
  rest >> sig.time >> sig.tz;
  return sig;
}

ObjectId BlobId(std::string_view content) {
  const std::string header = "blob " + std::to_string(content.size());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr);
  EVP_DigestUpdate(ctx, header.data(), header.size() + 1);  // includes NUL
  EVP_DigestUpdate(ctx, content.data(), content.size());
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest.data(), &len);
  EVP_MD_CTX_free(ctx);
  return ToHex(digest.data(), len);
}

CommandResult RunGit(const std::filesystem::path& cwd,
                     const std::vector<std::string>& args,
                     std::string_view input) {
  std::vector<std::string> argv = {"git"};
  argv.insert(argv.end(), args.begin(), args.end());
  return RunCommand(argv, cwd, input);
}

GitRepository::GitRepository(std::filesystem::path git_dir,
                             std::filesystem::path work_dir)
    : git_dir_(std::move(git_dir)), work_dir_(std::move(work_dir)) {}

std::unique_ptr<GitRepository> GitRepository::Open(
    const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec)) {
    throw IoError("not a directory: " + path.string());
  }
  const CommandResult r = RunGit(path, {"rev-parse", "--absolute-git-dir"});
  if (r.exit_code != 0) {
    throw IoError("not a git repository: " + path.string());
  }
  const std::filesystem::path git_dir = Trim(r.out);
  return std::unique_ptr<GitRepository>(
      new GitRepository(git_dir, std::filesystem::absolute(path)));
}

CommandResult GitRepository::Git(const std::vector<std::string>& args,
                                 std::string_view input) const {
  std::vector<std::string> full = {"--git-dir=" + git_dir_.string()};
  full.insert(full.end(), args.begin(), args.end());
  return RunGit(work_dir_, full, input);
}

std::optional<ObjectId> GitRepository::ResolveCommit(
    const std::string& rev) const {
  const CommandResult r =
      Git({"rev-parse", "--verify", "--quiet", rev + "^{commit}"});
  if (r.exit_code != 0) return std::nullopt;
  return Trim(r.out);
}

std::vector<std::pair<std::string, ObjectId>> GitRepository::ListRefs() const {
  const CommandResult r =
      Git({"for-each-ref", "--format=%(objectname) %(refname)"});
  if (r.exit_code != 0) throw IoError("for-each-ref failed: " + r.err);
  std::vector<std::pair<std::string, ObjectId>> refs;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t sp = line.find(' ');
    if (sp == std::string::npos) continue;
    refs.emplace_back(line.substr(sp + 1), line.substr(0, sp));
  }
  std::sort(refs.begin(), refs.end());
  return refs;
}

std::optional<std::string> GitRepository::HeadTarget() const {
  const CommandResult r = Git({"symbolic-ref", "-q", "HEAD"});
  if (r.exit_code != 0) return std::nullopt;
  return Trim(r.out);
}

std::vector<ObjectId> GitRepository::RevList(
    const std::vector<ObjectId>& tips) const {
  if (tips.empty()) return {};
  std::string input;
  for (const auto& t : tips) input += t + "\n";
  const CommandResult r =
      Git({"rev-list", "--topo-order", "--reverse", "--stdin"}, input);
  if (r.exit_code != 0) throw IoError("rev-list failed: " + r.err);
  std::vector<ObjectId> ids;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

std::pair<std::string, std::string> GitRepository::ReadObject(
    const ObjectId& id) {
  if (!batch_) {
    Process::Options opts;
    opts.cwd = work_dir_;
    batch_ = std::make_unique<Process>(
        std::vector<std::string>{"git", "--git-dir=" + git_dir_.string(),
                                 "cat-file", "--batch"},
        opts);
  }
  try {
    batch_->Write(id + "\n");
    const std::string header = batch_->ReadLine();
    const std::size_t s1 = header.find(' ');
    const std::size_t s2 = header.find(' ', s1 + 1);
    if (s1 == std::string::npos || s2 == std::string::npos) {
      throw CorruptRepoError("cannot read object", id);
    }
    const std::string type = header.substr(s1 + 1, s2 - s1 - 1);
    const std::size_t size = std::stoull(header.substr(s2 + 1));
    std::string data = batch_->ReadExactly(size);
    batch_->ReadExactly(1);  // trailing LF
    return {type, std::move(data)};
  } catch (const CorruptRepoError&) {
    throw;
  } catch (const std::exception& e) {
    batch_.reset();
    throw IoError(std::string("object read failed: ") + e.what());
  }
}

std::string GitRepository::ObjectType(const ObjectId& id) {
  std::lock_guard lock(mu_);
  return ReadObject(id).first;
}

CommitRecord GitRepository::ReadCommit(const ObjectId& id) {
  std::pair<std::string, std::string> obj;
  {
    std::lock_guard lock(mu_);
    obj = ReadObject(id);
  }
  if (obj.first != "commit") throw CorruptRepoError("not a commit", id);
  CommitRecord c;
  c.id = id;
  auto [headers, message] = SplitHeaders(obj.second);
  for (auto& [key, value] : headers) {
    if (key == "tree") {
      c.tree_id = value;
    } else if (key == "parent") {
      c.parent_ids.push_back(value);
    } else if (key == "author") {
      c.author = value;
    } else if (key == "committer") {
      c.committer = value;
    } else if (key == "encoding") {
      c.encoding = value;
    }
  }
  if (c.tree_id.size() != 40 || c.committer.empty()) {
    throw CorruptRepoError("malformed commit", id);
  }
  c.message = std::move(message);
  return c;
}

TagRecord GitRepository::ReadTag(const ObjectId& id) {
  std::pair<std::string, std::string> obj;
  {
    std::lock_guard lock(mu_);
    obj = ReadObject(id);
  }
  if (obj.first != "tag") throw CorruptRepoError("not a tag", id);
  TagRecord t;
  t.id = id;
  auto [headers, message] = SplitHeaders(obj.second);
  for (auto& [key, value] : headers) {
    if (key == "object") t.object = value;
    if (key == "type") t.type = value;
    if (key == "tag") t.name = value;
    if (key == "tagger") t.tagger = value;
  }
  t.message = std::move(message);
  return t;
}

std::string GitRepository::ReadBlob(const ObjectId& id) {
  std::lock_guard lock(mu_);
  auto [type, data] = ReadObject(id);
  if (type != "blob") throw CorruptRepoError("not a blob", id);
  return std::move(data);
}

std::shared_ptr<const TreeListing> GitRepository::ReadTree(const ObjectId& id) {
  std::lock_guard lock(mu_);
  if (auto it = trees_.find(id); it != trees_.end()) return it->second;
  auto [type, data] = ReadObject(id);
  if (type != "tree") throw CorruptRepoError("not a tree", id);
  auto listing = std::make_shared<TreeListing>();
  std::size_t pos = 0;
  while (pos < data.size()) {
    const std::size_t sp = data.find(' ', pos);
    const std::size_t nul = data.find('\0', sp);
    if (sp == std::string::npos || nul == std::string::npos ||
        nul + 21 > data.size()) {
      throw CorruptRepoError("malformed tree", id);
    }
    TreeEntry e;
    e.mode = static_cast<std::uint32_t>(
        std::stoul(data.substr(pos, sp - pos), nullptr, 8));
    e.name = data.substr(sp + 1, nul - sp - 1);
    e.id = ToHex(reinterpret_cast<const unsigned char*>(data.data() + nul + 1),
                 20);
    listing->push_back(std::move(e));
    pos = nul + 21;
  }
  trees_.emplace(id, listing);
  return listing;
}

std::shared_ptr<const TreeListing> GitRepository::ListTreeRecursive(
    const ObjectId& id) {
  {
    std::lock_guard lock(mu_);
    if (auto it = flat_trees_.find(id); it != flat_trees_.end()) {
      return it->second;
    }
  }
  auto flat = std::make_shared<TreeListing>();
  const auto entries = ReadTree(id);
  for (const TreeEntry& e : *entries) {
    if (e.IsTree()) {
      const auto subtree = ListTreeRecursive(e.id);
      for (const TreeEntry& sub : *subtree) {
        flat->push_back({e.name + "/" + sub.name, sub.mode, sub.id});
      }
    } else {
      flat->push_back(e);
    }
  }
  std::sort(flat->begin(), flat->end(),
            [](const TreeEntry& a, const TreeEntry& b) { return a.name < b.name; });
  std::lock_guard lock(mu_);
  flat_trees_.emplace(id, flat);
  return flat;
}

}  // namespace mgit
