from pydantic import BaseModel


class ElasticaSchema(BaseModel):
    """
    A base template for all other elastica schemas to inherit from.
    """

    class Config:
        """Reject unknown keys so typos in run files surface as errors"""

        extra = "forbid"


BaseSchema = ElasticaSchema
