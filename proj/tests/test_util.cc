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

#include "test_util.h"

#include <unistd.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgit/process.h"

namespace mgit::testing {

TempDir::TempDir() {
  std::string tmpl =
      (std::filesystem::temp_directory_path() / "mgit-test-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

RepoBuilder::RepoBuilder(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
  GitOut(dir_, {"init", "-q"});
}

int RepoBuilder::Commit(const Files& files, std::vector<int> parents,
                        const std::string& message,
                        const std::string& branch) {
  const int mark = ++count_;
  const std::string ref = "refs/heads/" + branch;
  const std::string when = std::to_string(1500000000 + mark * 60) + " +0000";
  std::ostringstream s;
  if (parents.empty()) s << "reset " << ref << "\n";
  s << "commit " << ref << "\nmark :" << mark << "\n"
    << "author Dev <dev@example.com> " << when << "\n"
    << "committer Dev <dev@example.com> " << when << "\n"
    << "data " << message.size() << "\n" << message << "\n";
  for (std::size_t i = 0; i < parents.size(); ++i) {
    s << (i == 0 ? "from :" : "merge :") << parents[i] << "\n";
  }
  s << "deleteall\n";
  for (const auto& [path, content] : files) {
    s << "M 100644 inline " << path << "\ndata " << content.size() << "\n"
      << content << "\n";
  }
  s << "\n";
  stream_ += s.str();
  tips_[branch] = mark;
  return mark;
}

int RepoBuilder::Change(const std::string& branch, const Files& changed,
                        const std::vector<std::string>& deleted,
                        const std::string& message) {
  const int mark = ++count_;
  const std::string ref = "refs/heads/" + branch;
  const std::string when = std::to_string(1500000000 + mark * 60) + " +0000";
  std::ostringstream s;
  auto tip = tips_.find(branch);
  if (tip == tips_.end()) s << "reset " << ref << "\n";
  s << "commit " << ref << "\nmark :" << mark << "\n"
    << "author Dev <dev@example.com> " << when << "\n"
    << "committer Dev <dev@example.com> " << when << "\n"
    << "data " << message.size() << "\n" << message << "\n";
  if (tip != tips_.end()) s << "from :" << tip->second << "\n";
  for (const std::string& path : deleted) s << "D " << path << "\n";
  for (const auto& [path, content] : changed) {
    s << "M 100644 inline " << path << "\ndata " << content.size() << "\n"
      << content << "\n";
  }
  s << "\n";
  stream_ += s.str();
  tips_[branch] = mark;
  return mark;
}

int RepoBuilder::CommitOn(const std::string& branch, const Files& files,
                          const std::string& message) {
  auto it = tips_.find(branch);
  if (it == tips_.end()) return Commit(files, {}, message, branch);
  return Commit(files, {it->second}, message, branch);
}

void RepoBuilder::Tag(const std::string& name, int commit,
                      const std::string& message) {
  stream_ += "tag " + name + "\nfrom :" + std::to_string(commit) +
             "\ntagger Dev <dev@example.com> 1600000000 +0000\ndata " +
             std::to_string(message.size()) + "\n" + message + "\n";
}

void RepoBuilder::LightTag(const std::string& name, int commit) {
  stream_ += "reset refs/tags/" + name + "\nfrom :" + std::to_string(commit) +
             "\n\n";
}

std::vector<ObjectId> RepoBuilder::Finish(const std::string& head_branch) {
  const std::filesystem::path marks = dir_ / ".git" / "builder-marks";
  const CommandResult r =
      RunGit(dir_, {"fast-import", "--quiet", "--export-marks=" + marks.string()},
             stream_);
  if (r.exit_code != 0) throw std::runtime_error("fast-import: " + r.err);
  GitOut(dir_, {"symbolic-ref", "HEAD", "refs/heads/" + head_branch});
  std::vector<ObjectId> ids(count_ + 1);
  std::istringstream in(ReadFile(marks));
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t sp = line.find(' ');
    ids[std::stoi(line.substr(1, sp - 1))] = line.substr(sp + 1);
  }
  std::filesystem::remove(marks);
  return ids;
}

Files ReadTreeFiles(const std::filesystem::path& repo, const std::string& rev) {
  Files files;
  std::istringstream in(GitOut(repo, {"ls-tree", "-r", "-z", rev}));
  std::vector<std::string> paths;
  std::string entry, ids;
  while (std::getline(in, entry, '\0')) {
    // "<mode> <type> <id>\t<path>"
    const std::size_t tab = entry.find('\t');
    if (entry.compare(tab - 45, 4, "blob") != 0) continue;
    ids += entry.substr(tab - 40, 40) + "\n";
    paths.push_back(entry.substr(tab + 1));
  }
  if (paths.empty()) return files;
  const std::string out = GitOut(repo, {"cat-file", "--batch"}, ids);
  std::size_t pos = 0;
  for (const std::string& path : paths) {
    // "<id> blob <size>\n<content>\n"
    const std::size_t nl = out.find('\n', pos);
    const std::size_t sp = out.rfind(' ', nl);
    const std::size_t size = std::stoull(out.substr(sp + 1, nl - sp - 1));
    files[path] = out.substr(nl + 1, size);
    pos = nl + 1 + size + 1;
  }
  return files;
}

std::string GitOut(const std::filesystem::path& repo,
                   const std::vector<std::string>& args,
                   const std::string& input) {
  const CommandResult r = RunGit(repo, args, input);
  if (r.exit_code != 0) {
    std::string cmd = "git";
    for (const auto& a : args) cmd += " " + a;
    throw std::runtime_error(cmd + ": " + r.err);
  }
  return r.out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::filesystem::path CliPath() { return MGIT_CLI_PATH; }

}  // namespace mgit::testing
