"""Core context types: tables, paragraphs, images, and the entities gluing them."""

from __future__ import annotations

from dataclasses import dataclass, field


SEMANTIC_TYPES = ("date", "numeric", "index", "text")
IMAGE_SOURCES = ("in_table", "entity_page")
PARAGRAPH_ROLES = ("gold", "distractor", "unassigned")


@dataclass(frozen=True)
class ImageRef:
    """A single image, either embedded in a table cell or taken from an entity's page."""

    id: str
    uri: str
    source: str = "entity_page"
    entity_title: str | None = None

    def to_dict(self) -> dict:
        d = {"id": self.id, "uri": self.uri, "source": self.source}
        if self.entity_title is not None:
            d["entity_title"] = self.entity_title
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ImageRef":
        return cls(
            id=d["id"],
            uri=d.get("uri", ""),
            source=d.get("source", "entity_page"),
            entity_title=d.get("entity_title"),
        )


@dataclass(frozen=True)
class WikiEntity:
    title: str
    image: ImageRef | None = None

    def to_dict(self) -> dict:
        d: dict = {"title": self.title}
        if self.image is not None:
            d["image"] = self.image.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "WikiEntity":
        img = d.get("image")
        return cls(title=d["title"], image=ImageRef.from_dict(img) if img else None)


@dataclass(frozen=True)
class Cell:
    text: str
    links: tuple[str, ...] = ()
    image: ImageRef | None = None

    def to_dict(self) -> dict:
        d: dict = {"text": self.text}
        if self.links:
            d["links"] = list(self.links)
        if self.image is not None:
            d["image"] = self.image.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Cell":
        img = d.get("image")
        return cls(
            text=d.get("text", ""),
            links=tuple(d.get("links", ())),
            image=ImageRef.from_dict(img) if img else None,
        )


@dataclass(frozen=True)
class Column:
    header: str
    semantic_type: str
    position: int

    def to_dict(self) -> dict:
        return {"header": self.header, "semantic_type": self.semantic_type, "position": self.position}

    @classmethod
    def from_dict(cls, d: dict) -> "Column":
        return cls(header=d["header"], semantic_type=d["semantic_type"], position=d["position"])


@dataclass(frozen=True)
class Table:
    page_title: str
    table_title: str
    columns: tuple[Column, ...]
    rows: tuple[tuple[Cell, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    def column_cells(self, position: int) -> list[Cell]:
        return [row[position] for row in self.rows]

    def column_by_header(self, header: str) -> Column | None:
        wanted = header.strip().lower()
        for col in self.columns:
            if col.header.strip().lower() == wanted:
                return col
        return None

    def in_table_images(self) -> list[ImageRef]:
        out = []
        for row in self.rows:
            for cell in row:
                if cell.image is not None:
                    out.append(cell.image)
        return out

    def linked_entity_titles(self) -> list[str]:
        """Distinct entity titles linked from any cell, in first-appearance order."""
        seen: dict[str, None] = {}
        for row in self.rows:
            for cell in row:
                for title in cell.links:
                    seen.setdefault(title, None)
        return list(seen)

    def to_dict(self) -> dict:
        return {
            "page_title": self.page_title,
            "table_title": self.table_title,
            "columns": [c.to_dict() for c in self.columns],
            "rows": [[cell.to_dict() for cell in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Table":
        return cls(
            page_title=d["page_title"],
            table_title=d["table_title"],
            columns=tuple(Column.from_dict(c) for c in d["columns"]),
            rows=tuple(tuple(Cell.from_dict(c) for c in row) for row in d["rows"]),
        )


@dataclass(frozen=True)
class Paragraph:
    id: str
    article_title: str
    text: str
    role: str = "unassigned"
    lead: bool = False

    def to_dict(self) -> dict:
        d = {"id": self.id, "article_title": self.article_title, "text": self.text, "role": self.role}
        if self.lead:
            d["lead"] = True
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Paragraph":
        return cls(
            id=d["id"],
            article_title=d.get("article_title", ""),
            text=d["text"],
            role=d.get("role", "unassigned"),
            lead=bool(d.get("lead", False)),
        )

    def with_role(self, role: str) -> "Paragraph":
        return Paragraph(id=self.id, article_title=self.article_title, text=self.text, role=role, lead=self.lead)


@dataclass(frozen=True)
class Context:
    """One anchor table plus the paragraphs, images, and entities attached to it."""

    context_id: str
    table: Table
    paragraphs: tuple[Paragraph, ...] = ()
    images: tuple[ImageRef, ...] = ()
    entities: tuple[WikiEntity, ...] = field(default=())

    def entity_by_title(self, title: str) -> WikiEntity | None:
        for ent in self.entities:
            if ent.title == title:
                return ent
        return None

    def image_by_id(self, image_id: str) -> ImageRef | None:
        for img in self.images:
            if img.id == image_id:
                return img
        return None

    def paragraph_by_id(self, pid: str) -> Paragraph | None:
        for p in self.paragraphs:
            if p.id == pid:
                return p
        return None

    def lead_paragraphs(self) -> list[Paragraph]:
        return [p for p in self.paragraphs if p.lead]

    def to_dict(self) -> dict:
        return {
            "context_id": self.context_id,
            "table": self.table.to_dict(),
            "paragraphs": [p.to_dict() for p in self.paragraphs],
            "images": [i.to_dict() for i in self.images],
            "entities": [e.to_dict() for e in self.entities],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Context":
        return cls(
            context_id=d.get("context_id", ""),
            table=Table.from_dict(d["table"]),
            paragraphs=tuple(Paragraph.from_dict(p) for p in d.get("paragraphs", ())),
            images=tuple(ImageRef.from_dict(i) for i in d.get("images", ())),
            entities=tuple(WikiEntity.from_dict(e) for e in d.get("entities", ())),
        )
