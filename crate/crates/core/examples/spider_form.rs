//! The three-element definedness biconditional against the spider form on
//! longer words.

use catale::psemi::PartialSemigroup;
use catale::smallgen::{enum_psgs, psg_tables};

fn main() {
    let broken = PartialSemigroup::from_triples(&["a", "b", "c"], &[("a", "b", "a"), ("b", "c", "b")]).unwrap();
    println!("{broken}");
    for v in &broken.validate().violations {
        println!("  {}", v.describe(&broken));
    }
    let spider = broken.spider_check(3).unwrap();
    if let Some(v) = spider.violations.first() {
        let word: Vec<&str> = v.word.iter().map(|&x| broken.name(x)).collect();
        println!("  spider: word {} with cuts {:?}", word.join(""), v.cuts);
    }

    let mut agree = 0;
    let mut total = 0;
    for table in psg_tables(2).unwrap() {
        let s = PartialSemigroup::new(vec!["a".into(), "b".into()], table).unwrap();
        total += 1;
        if s.is_valid() == s.spider_check(5).unwrap().is_clean() {
            agree += 1;
        }
    }
    println!("two-element tables: {agree} of {total} agree at word length 5");
    println!("valid tables on 3 elements: {}", enum_psgs(3).unwrap().count());
}
