"""Regenerates the desk fixture corpus (corpus/articles.rss) and the English
LM text lm/en_*.txt. Phrase tables, lexicons, categories, entities.tsv and
lm/de_mono.txt are hand-written and not touched."""

import argparse
import html
import os
import random

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("output", nargs="?", default=os.path.join(os.path.dirname(__file__), "..", "data", "desk"))
D = parser.parse_args().output
os.makedirs(f"{D}/lm", exist_ok=True)
os.makedirs(f"{D}/corpus", exist_ok=True)
random.seed(2011)

# (source, title-style english, content-style english)
DE_SUBJ = [("Die Regierung", "Regierung", "government"), ("Der Minister", "Minister", "minister"),
           ("Die Polizei", "Polizei", "police"), ("Die Firma", "Firma", "company"),
           ("Der Trainer", "Trainer", "coach"), ("Die Bank", "Bank", "bank"),
           ("Das Krankenhaus", "Krankenhaus", "hospital"),
           ("Bundeskanzlerin Angela Merkel", "Merkel", None)]
DE_VERB = [("plant", "plans", "planning"), ("kritisiert", "criticises", "criticising"),
           ("unterstützt", "supports", "backing"), ("meldet", "reports", "reporting"),
           ("verliert", "loses", "losing"), ("gewinnt", "wins", "winning")]
DE_OBJ = [("eine Reform", "Reform", "a reform", "reform"), ("den Haushalt", "Haushalt", "the budget", "budget"),
          ("das Spiel", "Spiel", "the match", "match"), ("neue Arbeitsplätze", "Arbeitsplätze", "new jobs", "jobs"),
          ("die Steuern", "Steuern", "the taxes", "taxes"), ("einen Impfstoff", "Impfstoff", "a vaccine", "vaccine"),
          ("einen Aktionsplan", "Aktionsplan", "an action plan", "action plan"),
          ("den Arbeitsmarkt", "Arbeitsmarkt", "the labour market", "labour market")]
DE_TIME = [("heute", "today"), ("am Montag", "on Monday"), ("am Dienstag", "on Tuesday"), ("erneut", "again")]

FR_SUBJ = [("Le gouvernement", "Gouvernement", "government"), ("Le ministre", "Ministre", "minister"),
           ("La police", "Police", "police"), ("La société", "Société", "company"),
           ("Le club", "Club", "club"), ("La banque", "Banque", "bank"),
           ("Le président Nicolas Sarkozy", "Sarkozy", None),
           ("Le ministre Bruno Le Maire", "Bruno Le Maire", None)]
FR_VERB = [("prépare", "prepares", "preparing"), ("critique", "criticises", "criticising"),
           ("soutient", "supports", "backing"), ("annonce", "announces", "announcing"),
           ("perd", "loses", "losing"), ("gagne", "wins", "winning")]
FR_OBJ = [("une réforme", "réforme", "a reform", "reform"), ("le budget", "budget", "the budget", "budget"),
          ("le match", "match", "the match", "match"), ("des emplois", "emplois", "jobs", "jobs"),
          ("les impôts", "impôts", "the taxes", "taxes"), ("un vaccin", "vaccin", "a vaccine", "vaccine")]
FR_TIME = [("lundi", "on Monday"), ("mardi", "on Tuesday"), ("encore", "again")]

SUBJ_EN = {"Bundeskanzlerin Angela Merkel": "Chancellor Angela Merkel", "Le président Nicolas Sarkozy": "President Nicolas Sarkozy",
           "Le ministre Bruno Le Maire": "the minister Bruno Le Maire"}
HEAD_EN = {"Merkel": "Merkel", "Sarkozy": "Sarkozy", "Bruno Le Maire": "Bruno Le Maire"}

FR_FIXTURE = "Le ministre Bruno Le Maire a déclaré que la croissance est forte."

def body_sentence(lang):
    subj, verb, obj, time = (random.choice(x) for x in ((DE_SUBJ, DE_VERB, DE_OBJ, DE_TIME) if lang == "de" else (FR_SUBJ, FR_VERB, FR_OBJ, FR_TIME)))
    src = f"{subj[0]} {verb[0]} {obj[0]} {time[0]}."
    en_subj = SUBJ_EN.get(subj[0]) or "the " + subj[2]
    en = f"{en_subj} {verb[1]} {obj[2]} {time[1]}."
    return src, en[0].upper() + en[1:]

def headline(lang):
    subj, verb, obj = (random.choice(x) for x in ((DE_SUBJ, DE_VERB, DE_OBJ) if lang == "de" else (FR_SUBJ, FR_VERB, FR_OBJ)))
    src = f"{subj[1]} {verb[0]} {obj[1]}"
    en_subj = HEAD_EN.get(subj[1]) or subj[2]
    en = f"{en_subj} {verb[2]} {obj[3]}"
    return src, en[0].upper() + en[1:]

EXTRA = {"de": [("Der Bundestag berät heute.", "The Bundestag debates today."),
                ("Die Wirtschaft wächst.", "The economy grows.")],
         "fr": [("La croissance est forte.", "Growth is strong."),
                ("Le maire de Paris critique le budget.", "The mayor of Paris criticises the budget.")]}

articles = []
title_en, content_en = [], []
for i in range(50):
    lang = "de" if i % 2 == 0 else "fr"
    t_src, t_en = headline(lang)
    body, body_en = [], []
    for _ in range(random.randint(2, 4)):
        s, e = body_sentence(lang); body.append(s); body_en.append(e)
    if random.random() < 0.3:
        s, e = random.choice(EXTRA[lang]); body.append(s); body_en.append(e)
    if i == 1:
        body.insert(0, FR_FIXTURE); body_en.insert(0, "The minister Bruno Le Maire said that growth is strong.")
    day = 3 + (i % 25)
    articles.append(dict(lang=lang, title=t_src, body=" ".join(body), guid=f"desk-{i:03d}",
                         date=f"{['Mon','Tue','Wed','Thu','Fri','Sat','Sun'][(day+4)%7]}, {day:02d} Oct 2011 {8 + i % 10:02d}:{(i*7)%60:02d}:00 GMT",
                         link=f"http://news.example.org/{lang}/{i:03d}"))
    title_en.append(t_en); content_en.extend(body_en)

# LM corpora: translations of the corpus plus more generated text.
for _ in range(300):
    lang = random.choice(["de", "fr"])
    title_en.append(headline(lang)[1]); content_en.append(body_sentence(lang)[1])
content_en += [e for lst in EXTRA.values() for _, e in lst]
content_en += ["The minister Bruno Le Maire said that growth is strong.", "The mayor said that the budget is strong.",
               "Chancellor Angela Merkel said that the economy grows."]

def tok(s):
    return s.replace(".", " .").replace(",", " ,")

with open(f"{D}/lm/en_title.txt", "w") as f:
    for s in title_en: f.write(tok(s) + "\n")
with open(f"{D}/lm/en_content.txt", "w") as f:
    for s in content_en: f.write(tok(s) + "\n")
with open(f"{D}/lm/en_cased.txt", "w") as f:
    for s in content_en: f.write(s + "\n")

with open(f"{D}/corpus/articles.rss", "w") as f:
    f.write('<?xml version="1.0" encoding="UTF-8"?>\n<rss version="2.0">\n<channel>\n')
    f.write("  <title>Desk news fixture</title>\n  <link>http://news.example.org/</link>\n  <description>50 articles</description>\n")
    for a in articles:
        f.write("  <item>\n")
        f.write(f"    <title>{html.escape(a['title'], quote=False)}</title>\n")
        f.write(f"    <description>&lt;p&gt;{html.escape(html.escape(a['body'], quote=False), quote=False)}&lt;/p&gt;</description>\n")
        f.write(f"    <link>{a['link']}</link>\n    <guid isPermaLink=\"false\">{a['guid']}</guid>\n")
        f.write(f"    <pubDate>{a['date']}</pubDate>\n    <language>{a['lang']}</language>\n  </item>\n")
    f.write("</channel>\n</rss>\n")
print(len(articles), len(title_en), len(content_en))
