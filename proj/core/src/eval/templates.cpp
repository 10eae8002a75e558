// Copyright 2026 The r2c Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "r2c/eval/templates.hpp"

#include <algorithm>
#include <array>

#include "r2c/error.hpp"

namespace r2c::eval {
namespace {

constexpr std::string_view kContext = "{context}";
constexpr std::string_view kQuestion = "{question}";

// NQ follows the Llama-2 chat format used by lost-in-the-middle style QA
// evaluation; the LongBench entries follow the benchmark's official prompts.
constexpr std::array<PromptTemplate, 15> kTemplates = {{
    {"nq",
     "<s>[INST] <<SYS>>\nYou are a helpful, respectful and honest assistant. "
     "Always answer as helpfully as possible, while being safe. Please "
     "ensure that your responses are socially unbiased and positive in "
     "nature. If a question does not make any sense, or is not factually "
     "coherent, explain why instead of answering something not correct. If "
     "you don't know the answer to a question, please don't share false "
     "information.\n<</SYS>>\n\nWrite a high-quality answer for the given "
     "question using only the provided search results (some of which might "
     "be irrelevant).\n\n{context}\n\nQuestion: {question}\nAnswer: [/INST]"},
    {"narrativeqa",
     "You are given a story, which can be either a novel or a movie script, "
     "and a question. Answer the question as concisely as you can, using a "
     "single phrase if possible. Do not provide any explanation.\n\nStory: "
     "{context}\n\nNow, answer the question based on the story as concisely "
     "as you can, using a single phrase if possible. Do not provide any "
     "explanation.\n\nQuestion: {question}\n\nAnswer:"},
    {"qasper",
     "You are given a scientific article and a question. Answer the question "
     "as concisely as you can, using a single phrase or sentence if "
     "possible. If the question cannot be answered based on the information "
     "in the article, write \"unanswerable\". If the question is a yes/no "
     "question, answer \"yes\", \"no\", or \"unanswerable\". Do not provide "
     "any explanation.\n\nArticle: {context}\n\n Answer the question based "
     "on the above article as concisely as you can, using a single phrase or "
     "sentence if possible. If the question cannot be answered based on the "
     "information in the article, write \"unanswerable\". If the question is "
     "a yes/no question, answer \"yes\", \"no\", or \"unanswerable\". Do not "
     "provide any explanation.\n\nQuestion: {question}\n\nAnswer:"},
    {"multifieldqa_en",
     "Read the following text and answer briefly.\n\n{context}\n\nNow, "
     "answer the following question based on the above text, only give me "
     "the answer and do not output any other words.\n\nQuestion: "
     "{question}\nAnswer:"},
    {"hotpotqa",
     "Answer the question based on the given passages. Only give me the "
     "answer and do not output any other words.\n\nThe following are given "
     "passages.\n{context}\n\nAnswer the question based on the given "
     "passages. Only give me the answer and do not output any other "
     "words.\n\nQuestion: {question}\nAnswer:"},
    {"2wikimqa",
     "Answer the question based on the given passages. Only give me the "
     "answer and do not output any other words.\n\nThe following are given "
     "passages.\n{context}\n\nAnswer the question based on the given "
     "passages. Only give me the answer and do not output any other "
     "words.\n\nQuestion: {question}\nAnswer:"},
    {"musique",
     "Answer the question based on the given passages. Only give me the "
     "answer and do not output any other words.\n\nThe following are given "
     "passages.\n{context}\n\nAnswer the question based on the given "
     "passages. Only give me the answer and do not output any other "
     "words.\n\nQuestion: {question}\nAnswer:"},
    {"gov_report",
     "You are given a report by a government agency. Write a one-page "
     "summary of the report.\n\nReport:\n{context}\n\nNow, write a one-page "
     "summary of the report.\n\nSummary:"},
    {"qmsum",
     "You are given a meeting transcript and a query containing a question "
     "or instruction. Answer the query in one or more "
     "sentences.\n\nTranscript:\n{context}\n\nNow, answer the query based on "
     "the above meeting transcript in one or more sentences.\n\nQuery: "
     "{question}\nAnswer:"},
    {"multi_news",
     "You are given several news passages. Write a one-page summary of all "
     "news. \n\nNews:\n{context}\n\nNow, write a one-page summary of all the "
     "news.\n\nSummary:"},
    {"trec",
     "Please determine the type of the question below. Here are some "
     "examples of questions.\n\n{context}\n{question}"},
    {"triviaqa",
     "Answer the question based on the given passage. Only give me the "
     "answer and do not output any other words. The following are some "
     "examples.\n\n{context}\n\n{question}"},
    {"samsum",
     "Summarize the dialogue into a few short sentences. The following are "
     "some examples.\n\n{context}\n\n{question}"},
    {"lcc", "Please complete the code given below. \n{context}Next line of code:\n"},
    {"repobench-p",
     "Please complete the code given below. \n{context}{question}Next line "
     "of code:\n"},
}};

std::string replace_once(std::string text, std::string_view key,
                         std::string_view value) {
  if (const auto pos = text.find(key); pos != std::string::npos) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

}  // namespace

const PromptTemplate& template_for(std::string_view task) {
  for (const PromptTemplate& t : kTemplates) {
    if (t.task == task) return t;
  }
  throw ConfigError("no prompt template for task '" + std::string(task) + "'");
}

std::vector<std::string_view> known_tasks() {
  std::vector<std::string_view> tasks;
  for (const PromptTemplate& t : kTemplates) tasks.push_back(t.task);
  return tasks;
}

std::string render_prompt(const PromptTemplate& tmpl, std::string_view context,
                          std::string_view question) {
  // Placeholders are located in the template itself, so a context or
  // question that contains "{question}" is copied through untouched.
  std::string out;
  std::string_view rest = tmpl.text;
  for (;;) {
    const auto c = rest.find(kContext);
    const auto q = rest.find(kQuestion);
    const auto pos = std::min(c, q);
    if (pos == std::string_view::npos) break;
    out += rest.substr(0, pos);
    if (pos == c) {
      out += context;
      rest.remove_prefix(pos + kContext.size());
    } else {
      out += question;
      rest.remove_prefix(pos + kQuestion.size());
    }
  }
  out += rest;
  return out;
}

std::string template_framing(const PromptTemplate& tmpl) {
  return replace_once(replace_once(std::string(tmpl.text), kContext, ""),
                      kQuestion, "");
}

}  // namespace r2c::eval
