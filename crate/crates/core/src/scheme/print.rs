use super::{Forest, Mark, Node};

pub(super) fn forest_text<M: Mark>(s: &Forest<M>) -> String {
    format!("<{}>", body_text(s.pseudo_line, &s.ovals))
}

pub(super) fn node_text<M: Mark>(n: &Node<M>) -> String {
    if n.is_empty() {
        format!("1{}", n.mark.suffix())
    } else {
        format!("1{}<{}>", n.mark.suffix(), body_text(false, &n.children))
    }
}

fn body_text<M: Mark>(pseudo_line: bool, nodes: &[Node<M>]) -> String {
    let mut items = Vec::new();
    if pseudo_line {
        items.push("J".to_string());
    }
    let empties = nodes.iter().filter(|n| n.is_empty()).count();
    if empties > 0 {
        for &m in M::all() {
            let k = nodes.iter().filter(|n| n.is_empty() && n.mark == m).count();
            items.push(format!("{k}{}", m.suffix()));
        }
    }
    items.extend(nodes.iter().filter(|n| !n.is_empty()).map(node_text));
    if items.is_empty() {
        "0".to_string()
    } else {
        items.join(" + ")
    }
}
